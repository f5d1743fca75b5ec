#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "latsize/mat.hpp"
#include "latsize/vec.hpp"

namespace latsize {

// Supporting halfspace of a hull: normal . x >= offset for every point of
// the set, with equality on the facet. Normals are primitive and point
// inward.
struct Facet {
  Vec normal;
  std::int64_t offset;

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

// Sign of the area of triangle (o, a, b); > 0 means b lies left of o->a.
inline std::int64_t orient2d(const Vec& o, const Vec& a, const Vec& b) {
  Vec u = a - o, v = b - o;
  return checked_sub(checked_mul(u[0], v[1]), checked_mul(u[1], v[0]));
}

inline Vec cross3(const Vec& u, const Vec& v) {
  Vec r(3);
  r[0] = checked_sub(checked_mul(u[1], v[2]), checked_mul(u[2], v[1]));
  r[1] = checked_sub(checked_mul(u[2], v[0]), checked_mul(u[0], v[2]));
  r[2] = checked_sub(checked_mul(u[0], v[1]), checked_mul(u[1], v[0]));
  return r;
}

// Rank of the affine span of a point set, computed exactly by fraction-free
// elimination on difference vectors (entries renormalized by their gcd to
// keep growth in check).
inline int affine_rank(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  int n = pts.front().dim();
  std::vector<Vec> basis;
  for (std::size_t i = 1; i < pts.size() && static_cast<int>(basis.size()) < n; ++i) {
    Vec v = pts[i] - pts[0];
    for (const Vec& b : basis) {
      int piv = 0;
      while (b[piv] == 0) ++piv;
      if (v[piv] == 0) continue;
      Vec next(n);
      for (int k = 0; k < n; ++k)
        next[k] = checked_sub(checked_mul(b[piv], v[k]), checked_mul(v[piv], b[k]));
      v = next;
    }
    if (!v.is_zero()) basis.push_back(primitive_part(v));
  }
  return static_cast<int>(basis.size());
}

struct Hull2D {
  std::vector<Vec> cycle;  // extreme points, counterclockwise, lexicographic start
  bool degenerate = false;
};

// Monotone chain on already sorted, deduplicated points. Collinear points
// interior to an edge are dropped; degenerate inputs yield the segment
// endpoints (or the single point).
inline Hull2D convex_hull_2d(const std::vector<Vec>& sorted_points) {
  Hull2D out;
  const auto& p = sorted_points;
  if (p.empty()) throw Error("convex_hull_2d: empty point set");
  if (p.size() == 1) {
    out.cycle = {p[0]};
    out.degenerate = true;
    return out;
  }
  std::vector<Vec> lower, upper;
  for (const Vec& q : p) {
    while (lower.size() >= 2 && orient2d(lower[lower.size() - 2], lower.back(), q) <= 0)
      lower.pop_back();
    lower.push_back(q);
  }
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    while (upper.size() >= 2 && orient2d(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  out.cycle = std::move(lower);
  out.cycle.insert(out.cycle.end(), upper.begin(), upper.end());
  out.degenerate = out.cycle.size() < 3;
  return out;
}

// Edge halfspaces of a counterclockwise cycle (interior is to the left).
inline std::vector<Facet> facets_from_cycle(const std::vector<Vec>& cycle) {
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vec& a = cycle[i];
    const Vec& b = cycle[(i + 1) % cycle.size()];
    Vec d = b - a;
    Vec n(2);
    n[0] = checked_neg(d[1]);
    n[1] = d[0];
    n = primitive_part(n);
    facets.push_back(Facet{n, dot(n, a)});
  }
  return facets;
}

// Facets of a full-dimensional 3D point set by supporting-plane enumeration:
// every non-collinear triple spans a candidate plane, kept when all points
// lie on one side. Quadratic in spirit but exact and fine at this scale.
inline std::vector<Facet> convex_hull_3d_facets(const std::vector<Vec>& pts) {
  std::set<std::pair<Vec, std::int64_t>> seen;
  std::vector<Facet> facets;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec nrm = cross3(pts[j] - pts[i], pts[k] - pts[i]);
        if (nrm.is_zero()) continue;
        nrm = primitive_part(nrm);
        std::int64_t c = dot(nrm, pts[i]);
        bool above = false, below = false;
        for (const Vec& q : pts) {
          std::int64_t s = dot(nrm, q);
          if (s > c) above = true;
          if (s < c) below = true;
          if (above && below) break;
        }
        if (above && below) continue;
        if (below) {  // flip so the polytope satisfies normal . x >= offset
          nrm = -nrm;
          c = checked_neg(c);
        }
        if (seen.insert({nrm, c}).second) facets.push_back(Facet{nrm, c});
      }
  return facets;
}

}  // namespace latsize
