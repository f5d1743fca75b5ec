#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "latsize/checked.hpp"
#include "latsize/errors.hpp"

namespace latsize {

// Everything in this library works in dimension 1..4.
inline constexpr int kMaxDim = 4;

inline void require_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw DimensionError("dimension must be between 1 and " + std::to_string(kMaxDim) +
                         ", got " + std::to_string(dim));
}

// Integer lattice vector (point or direction) with overflow-checked entries.
class Vec {
 public:
  Vec() : dim_(0), entries_{} {}  // empty sentinel; any real use requires dim >= 1

  explicit Vec(int dim) : dim_(dim), entries_{} { require_dim(dim); }

  Vec(std::initializer_list<std::int64_t> entries) : dim_(static_cast<int>(entries.size())), entries_{} {
    require_dim(dim_);
    int i = 0;
    for (std::int64_t e : entries) entries_[i++] = e;
  }

  explicit Vec(const std::vector<std::int64_t>& entries)
      : dim_(static_cast<int>(entries.size())), entries_{} {
    require_dim(dim_);
    for (int i = 0; i < dim_; ++i) entries_[i] = entries[static_cast<std::size_t>(i)];
  }

  static Vec unit(int dim, int axis) {
    Vec v(dim);
    if (axis < 0 || axis >= dim) throw DimensionError("unit axis out of range");
    v.entries_[axis] = 1;
    return v;
  }

  int dim() const { return dim_; }

  std::int64_t operator[](int i) const { return entries_[i]; }
  std::int64_t& operator[](int i) { return entries_[i]; }

  bool is_zero() const {
    for (int i = 0; i < dim_; ++i)
      if (entries_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.entries_[i] != b.entries_[i]) return false;
    return true;
  }

  // Lexicographic by entries; shorter vectors first on dim mismatch.
  friend bool operator<(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (int i = 0; i < a.dim_; ++i)
      if (a.entries_[i] != b.entries_[i]) return a.entries_[i] < b.entries_[i];
    return false;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) r.entries_[i] = checked_add(a.entries_[i], b.entries_[i]);
    return r;
  }

  friend Vec operator-(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) r.entries_[i] = checked_sub(a.entries_[i], b.entries_[i]);
    return r;
  }

  friend Vec operator-(const Vec& a) {
    Vec r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) r.entries_[i] = checked_neg(a.entries_[i]);
    return r;
  }

  friend Vec operator*(std::int64_t s, const Vec& a) {
    Vec r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) r.entries_[i] = checked_mul(s, a.entries_[i]);
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.to_string(); }

 private:
  static void check_same_dim(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) throw DimensionError("vector dimension mismatch");
  }

  int dim_;
  std::array<std::int64_t, kMaxDim> entries_;
};

inline std::int64_t dot(const Vec& u, const Vec& v) {
  if (u.dim() != v.dim()) throw DimensionError("dot: dimension mismatch");
  std::int64_t acc = 0;
  for (int i = 0; i < u.dim(); ++i) acc = checked_add(acc, checked_mul(u[i], v[i]));
  return acc;
}

inline std::int64_t norm_sq(const Vec& v) { return dot(v, v); }

// gcd of the absolute values of the entries (0 for the zero vector).
inline std::int64_t content(const Vec& v) {
  std::int64_t g = 0;
  for (int i = 0; i < v.dim(); ++i) g = std::gcd(g, checked_abs(v[i]));
  return g;
}

inline bool is_primitive(const Vec& v) {
  if (v.is_zero()) throw Error("is_primitive: zero vector has no direction");
  return content(v) == 1;
}

inline Vec primitive_part(const Vec& v) {
  std::int64_t g = content(v);
  if (g == 0) throw Error("primitive_part: zero vector");
  Vec r(v.dim());
  for (int i = 0; i < v.dim(); ++i) r[i] = v[i] / g;
  return r;
}

// Canonical sign: first nonzero entry positive.
inline bool has_canonical_sign(const Vec& v) {
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] > 0) return true;
    if (v[i] < 0) return false;
  }
  return true;  // zero vector
}

inline Vec canonical_sign(const Vec& v) { return has_canonical_sign(v) ? v : -v; }

}  // namespace latsize
