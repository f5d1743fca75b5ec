#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "latsize/affine.hpp"
#include "latsize/hull.hpp"
#include "latsize/vec.hpp"

namespace latsize {

// Finite nonempty lattice point set. Points are deduplicated and stored in
// lexicographic order at construction; hull data is computed on first use
// and cached (first access is single-threaded, the value is immutable
// afterwards).
class Polytope {
 public:
  Polytope(int dim, std::vector<Vec> points) : dim_(dim), points_(std::move(points)) {
    require_dim(dim_);
    if (points_.empty()) throw Error("polytope: point set must be nonempty");
    for (const Vec& p : points_)
      if (p.dim() != dim_) throw DimensionError("polytope: point dimension mismatch");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  int dim() const { return dim_; }
  const std::vector<Vec>& points() const { return points_; }

  int affine_rank() const {
    if (!rank_) rank_ = latsize::affine_rank(points_);
    return *rank_;
  }

  bool full_dimensional() const { return affine_rank() == dim_; }
  bool is_point() const { return points_.size() == 1; }
  bool is_segment() const { return affine_rank() == 1; }

  const Hull2D& hull_2d() const {
    if (dim_ != 2) throw DimensionError("hull_2d: polytope is not 2-dimensional");
    if (!hull2d_) hull2d_ = convex_hull_2d(points_);
    return *hull2d_;
  }

  // Inward facet halfspaces; dimension 2 (from the hull cycle) or 3.
  const std::vector<Facet>& facets() const {
    if (facets_) return *facets_;
    if (!full_dimensional())
      throw DegeneracyError("facets: polytope is not full-dimensional", affine_rank());
    if (dim_ == 2)
      facets_ = facets_from_cycle(hull_2d().cycle);
    else if (dim_ == 3)
      facets_ = convex_hull_3d_facets(points_);
    else
      throw DimensionError("facets: only dimensions 2 and 3 are supported");
    return *facets_;
  }

 private:
  int dim_;
  std::vector<Vec> points_;
  mutable std::optional<int> rank_;
  mutable std::optional<Hull2D> hull2d_;
  mutable std::optional<std::vector<Facet>> facets_;
};

// max over P of v . x. The point-set maximum equals the hull maximum.
inline std::int64_t support(const Polytope& p, const Vec& v) {
  if (v.dim() != p.dim()) throw DimensionError("support: dimension mismatch");
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const Vec& x : p.points()) best = std::max(best, dot(v, x));
  return best;
}

inline std::int64_t width(const Polytope& p, const Vec& v) {
  if (v.is_zero()) throw Error("width: zero direction");
  return checked_add(support(p, v), support(p, -v));
}

inline Vec min_corner(const Polytope& p) {
  Vec m = p.points().front();
  for (const Vec& x : p.points())
    for (int i = 0; i < p.dim(); ++i) m[i] = std::min(m[i], x[i]);
  return m;
}

inline Vec max_corner(const Polytope& p) {
  Vec m = p.points().front();
  for (const Vec& x : p.points())
    for (int i = 0; i < p.dim(); ++i) m[i] = std::max(m[i], x[i]);
  return m;
}

// Translate so every per-coordinate minimum becomes 0; returns the applied
// translation vector.
inline std::pair<Polytope, Vec> translate_min_to_origin(const Polytope& p) {
  Vec t = -min_corner(p);
  std::vector<Vec> pts;
  pts.reserve(p.points().size());
  for (const Vec& x : p.points()) pts.push_back(x + t);
  return {Polytope(p.dim(), std::move(pts)), t};
}

inline Polytope transformed(const Polytope& p, const Mat& a) {
  std::vector<Vec> pts;
  pts.reserve(p.points().size());
  for (const Vec& x : p.points()) pts.push_back(a * x);
  return Polytope(p.dim(), std::move(pts));
}

inline Polytope transformed(const Polytope& p, const AffineMap& t) {
  std::vector<Vec> pts;
  pts.reserve(p.points().size());
  for (const Vec& x : p.points()) pts.push_back(t(x));
  return Polytope(p.dim(), std::move(pts));
}

}  // namespace latsize
