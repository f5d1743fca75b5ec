#pragma once

#include <array>
#include <vector>

#include "latsize/certificate.hpp"
#include "latsize/polytope.hpp"

namespace latsize {

// The four simplex-fitting quantities of a polygon, one per reflected
// orientation of the simplex. Their minimum is the naive lattice size.
struct LValues {
  std::int64_t l1 = 0, l2 = 0, l3 = 0, l4 = 0;

  std::int64_t operator[](int i) const {
    const std::array<const std::int64_t*, 4> v{&l1, &l2, &l3, &l4};
    return *v[static_cast<std::size_t>(i)];
  }

  std::int64_t min() const { return std::min(std::min(l1, l2), std::min(l3, l4)); }

  // Index (0..3) of the smallest value, earliest on ties.
  int argmin() const {
    std::int64_t m = min();
    for (int i = 0; i < 4; ++i)
      if ((*this)[i] == m) return i;
    return 0;
  }

  friend bool operator==(const LValues& a, const LValues& b) {
    return a.l1 == b.l1 && a.l2 == b.l2 && a.l3 == b.l3 && a.l4 == b.l4;
  }
};

inline LValues l_values(const Polytope& p) {
  if (p.dim() != 2) throw DimensionError("l_values: polygon required");
  Vec e1 = Vec::unit(2, 0), e2 = Vec::unit(2, 1);
  Vec d1{1, 1}, d2{1, -1};
  std::int64_t max_sum = support(p, d1), min_sum = checked_neg(support(p, -d1));
  std::int64_t max_x = support(p, e1), min_x = checked_neg(support(p, -e1));
  std::int64_t max_y = support(p, e2), min_y = checked_neg(support(p, -e2));
  std::int64_t max_xmy = support(p, d2), max_ymx = support(p, -d2);
  LValues lv;
  lv.l1 = checked_sub(checked_sub(max_sum, min_x), min_y);
  lv.l2 = checked_sub(checked_add(max_x, max_y), min_sum);
  lv.l3 = checked_add(checked_sub(max_y, min_x), max_xmy);
  lv.l4 = checked_add(checked_sub(max_x, min_y), max_ymx);
  return lv;
}

// Smallest k with P inside k-cube after a lattice shift: the largest
// per-coordinate extent. Works in any supported dimension.
inline std::int64_t nls_square(const Polytope& p) {
  std::int64_t k = 0;
  for (int i = 0; i < p.dim(); ++i) k = std::max(k, width(p, Vec::unit(p.dim(), i)));
  return k;
}

// Naive lattice size with its witness: the sign-diagonal matrix and the
// lattice translation placing the image in the positive quadrant.
struct NaiveSize {
  std::int64_t value = 0;
  Mat diagonal;
  Vec translation;
};

// The diagonal realizing each l-index: l1(D P) = l_index(P).
inline Mat diagonal_for_l_index(int index) {
  switch (index) {
    case 0: return Mat::diagonal(Vec{1, 1});
    case 1: return Mat::diagonal(Vec{-1, -1});
    case 2: return Mat::diagonal(Vec{1, -1});
    case 3: return Mat::diagonal(Vec{-1, 1});
    default: throw Error("diagonal_for_l_index: index out of range");
  }
}

inline NaiveSize nls_sigma_2d(const Polytope& p) {
  LValues lv = l_values(p);
  int idx = lv.argmin();
  NaiveSize out;
  out.value = lv[idx];
  out.diagonal = diagonal_for_l_index(idx);
  out.translation = -min_corner(transformed(p, out.diagonal));
  return out;
}

struct ReductionStep {
  Mat applied;
  std::int64_t box_before = 0;
  std::int64_t box_after = 0;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Mat final_map;  // product of all applied matrices
};

struct SquareReduction {
  ReductionTrace trace;
  std::int64_t k = 0;       // cube lattice size of the input
  Polytope reduced;         // image under final_map
};

// Shear candidates, in tie-break order. The union of both published
// statements of the candidate set; what matters is that one of them
// strictly decreases the box size whenever a diagonal width is short.
inline const std::array<Mat, 6>& shear_candidates_2d() {
  static const std::array<Mat, 6> kCandidates{
      Mat{Vec{1, 0}, Vec{1, 1}},  Mat{Vec{1, 0}, Vec{1, -1}}, Mat{Vec{1, 1}, Vec{0, 1}},
      Mat{Vec{1, -1}, Vec{0, 1}}, Mat{Vec{0, 1}, Vec{1, 1}},  Mat{Vec{0, 1}, Vec{1, -1}}};
  return kCandidates;
}

// Shear until the widths in both diagonal directions reach the box size;
// the box size is then the cube lattice size and the smaller basis width is
// the lattice width. Ends with a coordinate swap (never on ties) so that
// the x-extent is the smaller one.
inline SquareReduction reduce_square(const Polytope& p) {
  if (p.dim() != 2) throw DimensionError("reduce_square: polygon required");
  if (p.affine_rank() != 2)
    throw DegeneracyError("reduce_square: polygon must be full-dimensional", p.affine_rank());
  Vec diag_pos{1, 1}, diag_neg{1, -1};
  Polytope cur = p;
  ReductionTrace trace;
  trace.final_map = Mat::identity(2);
  std::int64_t k = nls_square(cur);
  while (width(cur, diag_pos) < k || width(cur, diag_neg) < k) {
    const Mat* best = nullptr;
    std::int64_t best_box = k;
    Polytope best_image = cur;
    for (const Mat& a : shear_candidates_2d()) {
      Polytope image = transformed(cur, a);
      std::int64_t box = nls_square(image);
      if (box < best_box) {
        best = &a;
        best_box = box;
        best_image = std::move(image);
      }
    }
    if (best == nullptr)
      throw InternalError("reduce_square: no shear decreases the box size although a diagonal "
                          "width is short");
    trace.steps.push_back(ReductionStep{*best, k, best_box});
    trace.final_map = *best * trace.final_map;
    cur = std::move(best_image);
    k = best_box;
  }
  if (width(cur, Vec::unit(2, 0)) > width(cur, Vec::unit(2, 1))) {
    Mat swap{Vec{0, 1}, Vec{1, 0}};
    trace.steps.push_back(ReductionStep{swap, k, k});
    trace.final_map = swap * trace.final_map;
    cur = transformed(cur, swap);
  }
  return SquareReduction{std::move(trace), k, std::move(cur)};
}

// Lattice length of a one-dimensional point set: the entry gcd of the
// difference of its endpoints.
inline std::int64_t lattice_length(const Polytope& p) {
  if (p.affine_rank() != 1) throw Error("lattice_length: not a segment");
  return content(p.points().back() - p.points().front());
}

// Size certificate for a point or segment, valid for both targets: a point
// maps to the origin, a segment onto [0, length] * e1.
inline SizeCertificate degenerate_certificate(const Polytope& p, Target target, Algorithm algo) {
  if (p.is_point())
    return SizeCertificate{target, 0,
                           AffineMap(Mat::identity(p.dim()), -p.points().front()), algo};
  if (!p.is_segment())
    throw DegeneracyError("degenerate_certificate: expected a point or segment",
                          p.affine_rank());
  Vec d = primitive_part(p.points().back() - p.points().front());
  Mat m = map_primitive_to_e1(d);
  Vec t = -min_corner(transformed(p, m));
  return SizeCertificate{target, lattice_length(p), AffineMap(m, t), algo};
}

// Fast simplex lattice size: reduce to the cube-optimal, width-sorted
// position, where the naive simplex size is the true one.
inline SizeCertificate ls_sigma_fast(const Polytope& p) {
  if (p.dim() != 2) throw DimensionError("ls_sigma_fast: polygon required");
  if (p.affine_rank() < 2) return degenerate_certificate(p, Target::kSimplex, Algorithm::kFast);
  SquareReduction red = reduce_square(p);
  NaiveSize naive = nls_sigma_2d(red.reduced);
  AffineMap map(naive.diagonal * red.trace.final_map, naive.translation);
  SizeCertificate cert{Target::kSimplex, naive.value, std::move(map), Algorithm::kFast};
  if (!verify(p, cert)) throw InternalError("ls_sigma_fast: certificate failed verification");
  return cert;
}

// Cube lattice size via the same reduction; the witness is the accumulated
// shear product with a normalizing shift.
inline SizeCertificate ls_square_fast(const Polytope& p) {
  if (p.dim() != 2) throw DimensionError("ls_square_fast: polygon required");
  if (p.affine_rank() < 2) return degenerate_certificate(p, Target::kCube, Algorithm::kFast);
  SquareReduction red = reduce_square(p);
  AffineMap map(red.trace.final_map, -min_corner(red.reduced));
  SizeCertificate cert{Target::kCube, red.k, std::move(map), Algorithm::kFast};
  if (!verify(p, cert)) throw InternalError("ls_square_fast: certificate failed verification");
  return cert;
}

// Lattice width of a polygon via the reduction: the x-extent of the reduced
// image, achieved in the direction of the first row of the reduction map.
inline SizeCertificate lattice_width_fast(const Polytope& p) {
  if (p.dim() != 2) throw DimensionError("lattice_width_fast: polygon required");
  if (p.affine_rank() < 2) {
    // Flat inputs have width 0 along the segment normal (or any direction
    // for a point).
    Vec dir{0, 1};
    if (p.is_segment()) {
      Vec d = primitive_part(p.points().back() - p.points().front());
      dir = canonical_sign(Vec{-d[1], d[0]});
    }
    Mat m = inverse_unimodular(map_primitive_to_e1(dir)).transposed();
    return SizeCertificate{Target::kWidth, 0, AffineMap::linear(m), Algorithm::kFast};
  }
  SquareReduction red = reduce_square(p);
  std::int64_t w = width(red.reduced, Vec::unit(2, 0));
  AffineMap map(red.trace.final_map, -min_corner(red.reduced));
  SizeCertificate cert{Target::kWidth, w, std::move(map), Algorithm::kFast};
  if (!verify(p, cert)) throw InternalError("lattice_width_fast: certificate failed verification");
  return cert;
}

struct ULDescent {
  SizeCertificate certificate;
  int descent_steps = 0;
};

// Descent variant: reflect so l1 is the naive size, then try the two upper/
// lower shears; stop when neither improves. Prefers U on ties.
inline ULDescent ls_sigma_ul_traced(const Polytope& p) {
  if (p.dim() != 2) throw DimensionError("ls_sigma_ul: polygon required");
  if (p.affine_rank() < 2)
    return ULDescent{degenerate_certificate(p, Target::kSimplex, Algorithm::kUL), 0};
  const Mat upper{Vec{1, 1}, Vec{0, 1}};
  const Mat lower{Vec{1, 0}, Vec{1, 1}};
  Polytope cur = p;
  Mat acc = Mat::identity(2);
  int steps = 0;
  for (;;) {
    LValues lv = l_values(cur);
    int idx = lv.argmin();
    Mat d = diagonal_for_l_index(idx);
    cur = transformed(cur, d);
    acc = d * acc;
    std::int64_t l = lv[idx];  // == l1(cur)
    Polytope up = transformed(cur, upper);
    if (l_values(up).min() < l) {
      cur = std::move(up);
      acc = upper * acc;
      ++steps;
      continue;
    }
    Polytope lo = transformed(cur, lower);
    if (l_values(lo).min() < l) {
      cur = std::move(lo);
      acc = lower * acc;
      ++steps;
      continue;
    }
    AffineMap map(acc, -min_corner(cur));
    SizeCertificate cert{Target::kSimplex, l, std::move(map), Algorithm::kUL};
    if (!verify(p, cert)) throw InternalError("ls_sigma_ul: certificate failed verification");
    return ULDescent{std::move(cert), steps};
  }
}

inline SizeCertificate ls_sigma_ul(const Polytope& p) {
  return ls_sigma_ul_traced(p).certificate;
}

}  // namespace latsize
