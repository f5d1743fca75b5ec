#pragma once

#include "latsize/mat.hpp"
#include "latsize/vec.hpp"

namespace latsize {

// x -> matrix*x + translation with |det(matrix)| = 1; preserves the lattice.
class AffineMap {
 public:
  AffineMap(Mat matrix, Vec translation)
      : matrix_(std::move(matrix)), translation_(std::move(translation)) {
    if (matrix_.dim() != translation_.dim())
      throw DimensionError("affine map: matrix and translation dimensions differ");
    if (!is_unimodular(matrix_))
      throw NonUnimodularError("affine map: matrix determinant is not +-1");
  }

  static AffineMap identity(int dim) { return AffineMap(Mat::identity(dim), Vec(dim)); }

  static AffineMap linear(Mat matrix) {
    Vec zero(matrix.dim());
    return AffineMap(std::move(matrix), zero);
  }

  static AffineMap translation_by(Vec t) { return AffineMap(Mat::identity(t.dim()), std::move(t)); }

  int dim() const { return matrix_.dim(); }
  const Mat& matrix() const { return matrix_; }
  const Vec& translation() const { return translation_; }

  Vec operator()(const Vec& p) const { return matrix_ * p + translation_; }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.matrix_ == b.matrix_ && a.translation_ == b.translation_;
  }

 private:
  Mat matrix_;
  Vec translation_;
};

// apply(compose(second, first), p) == apply(second, apply(first, p)).
inline AffineMap compose(const AffineMap& second, const AffineMap& first) {
  return AffineMap(second.matrix() * first.matrix(),
                   second.matrix() * first.translation() + second.translation());
}

inline AffineMap inverse(const AffineMap& t) {
  Mat minv = inverse_unimodular(t.matrix());
  return AffineMap(minv, -(minv * t.translation()));
}

}  // namespace latsize
