#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "latsize/vec.hpp"

namespace latsize {

// Square integer matrix, dimension 1..4, acting on column points (y = A*x).
class Mat {
 public:
  Mat() : dim_(0) {}

  explicit Mat(int dim) : dim_(dim) {
    require_dim(dim);
    for (int i = 0; i < dim; ++i) rows_[i] = Vec(dim);
  }

  Mat(std::initializer_list<Vec> rows) : dim_(static_cast<int>(rows.size())) {
    require_dim(dim_);
    int i = 0;
    for (const Vec& r : rows) {
      if (r.dim() != dim_) throw DimensionError("matrix rows must match matrix dimension");
      rows_[i++] = r;
    }
  }

  static Mat identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m.rows_[i][i] = 1;
    return m;
  }

  static Mat diagonal(const Vec& d) {
    Mat m(d.dim());
    for (int i = 0; i < d.dim(); ++i) m.rows_[i][i] = d[i];
    return m;
  }

  int dim() const { return dim_; }

  const Vec& row(int i) const { return rows_[i]; }
  Vec& row(int i) { return rows_[i]; }
  std::int64_t operator()(int i, int j) const { return rows_[i][j]; }
  std::int64_t& operator()(int i, int j) { return rows_[i][j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (!(a.rows_[i] == b.rows_[i])) return false;
    return true;
  }

  // Lexicographic row-major order; used for deterministic tie-breaking.
  friend bool operator<(const Mat& a, const Mat& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (int i = 0; i < a.dim_; ++i) {
      if (a.rows_[i] < b.rows_[i]) return true;
      if (b.rows_[i] < a.rows_[i]) return false;
    }
    return false;
  }

  friend Vec operator*(const Mat& m, const Vec& p) {
    if (m.dim_ != p.dim()) throw DimensionError("matrix-vector dimension mismatch");
    Vec r(m.dim_);
    for (int i = 0; i < m.dim_; ++i) r[i] = dot(m.rows_[i], p);
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.dim_ != b.dim_) throw DimensionError("matrix-matrix dimension mismatch");
    Mat r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j) {
        std::int64_t acc = 0;
        for (int k = 0; k < a.dim_; ++k)
          acc = checked_add(acc, checked_mul(a.rows_[i][k], b.rows_[k][j]));
        r.rows_[i][j] = acc;
      }
    return r;
  }

  Mat transposed() const {
    Mat r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r.rows_[j][i] = rows_[i][j];
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << rows_[i].to_string();
    os << ']';
    return os.str();
  }

 private:
  int dim_;
  std::array<Vec, kMaxDim> rows_;
};

// Exact determinant by cofactor expansion. Sufficient for the supported
// dimension range (<= 4); no general elimination is provided.
inline std::int64_t det(const Mat& m) {
  switch (m.dim()) {
    case 1:
      return m(0, 0);
    case 2:
      return checked_sub(checked_mul(m(0, 0), m(1, 1)), checked_mul(m(0, 1), m(1, 0)));
    case 3: {
      std::int64_t a = checked_mul(m(0, 0), checked_sub(checked_mul(m(1, 1), m(2, 2)),
                                                        checked_mul(m(1, 2), m(2, 1))));
      std::int64_t b = checked_mul(m(0, 1), checked_sub(checked_mul(m(1, 0), m(2, 2)),
                                                        checked_mul(m(1, 2), m(2, 0))));
      std::int64_t c = checked_mul(m(0, 2), checked_sub(checked_mul(m(1, 0), m(2, 1)),
                                                        checked_mul(m(1, 1), m(2, 0))));
      return checked_add(checked_sub(a, b), c);
    }
    case 4: {
      std::int64_t acc = 0;
      for (int j = 0; j < 4; ++j) {
        Mat minor(3);
        for (int r = 1; r < 4; ++r) {
          int cc = 0;
          for (int c = 0; c < 4; ++c) {
            if (c == j) continue;
            minor(r - 1, cc++) = m(r, c);
          }
        }
        std::int64_t term = checked_mul(m(0, j), det(minor));
        acc = (j % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
      }
      return acc;
    }
    default:
      throw DimensionError("det: dimension must be 1..4");
  }
}

inline bool is_unimodular(const Mat& m) {
  std::int64_t d = det(m);
  return d == 1 || d == -1;
}

// Exact integer inverse of a matrix with det = +-1 (adjugate divided by det).
inline Mat inverse_unimodular(const Mat& m) {
  std::int64_t d = det(m);
  if (d != 1 && d != -1)
    throw NonUnimodularError("inverse_unimodular: determinant is " + std::to_string(d) +
                             ", not +-1");
  int n = m.dim();
  Mat inv(n);
  if (n == 1) {
    inv(0, 0) = d;  // 1/d = d for d = +-1
    return inv;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Mat minor(n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      std::int64_t cof = det(minor);
      if ((i + j) % 2 == 1) cof = checked_neg(cof);
      inv(j, i) = (d == 1) ? cof : checked_neg(cof);  // adjugate transpose / det
    }
  }
  return inv;
}

// All 2^n diagonal matrices with +-1 entries, enumerated as a binary counter
// with + before - (so the identity comes first).
inline std::vector<Mat> sign_diagonals(int n) {
  require_dim(n);
  std::vector<Mat> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    Vec d(n);
    for (int i = 0; i < n; ++i) d[i] = (bits >> (n - 1 - i)) & 1u ? -1 : 1;
    out.push_back(Mat::diagonal(d));
  }
  return out;
}

// Unimodular matrix M with M*v = e1, for primitive v. Built from pairwise
// extended-gcd eliminations on adjacent coordinates.
inline Mat map_primitive_to_e1(const Vec& v) {
  if (!is_primitive(v)) throw Error("map_primitive_to_e1: vector must be primitive");
  int n = v.dim();
  Mat acc = Mat::identity(n);
  Vec cur = v;
  for (int i = n - 1; i >= 1; --i) {
    std::int64_t a = cur[i - 1], b = cur[i];
    if (b == 0) continue;
    std::int64_t x, y;
    std::int64_t g = extended_gcd(a, b, x, y);
    // [[x, y], [-b/g, a/g]] has determinant 1 and sends (a, b) to (g, 0).
    Mat step = Mat::identity(n);
    step(i - 1, i - 1) = x;
    step(i - 1, i) = y;
    step(i, i - 1) = checked_neg(b / g);
    step(i, i) = a / g;
    acc = step * acc;
    cur = step * cur;
  }
  if (cur[0] == -1) {
    Mat flip = Mat::identity(n);
    flip(0, 0) = -1;
    acc = flip * acc;
    cur = flip * cur;
  }
  if (!(cur == Vec::unit(n, 0))) throw InternalError("map_primitive_to_e1: reduction failed");
  return acc;
}

}  // namespace latsize
