#pragma once

#include <string>

#include "latsize/affine.hpp"
#include "latsize/polytope.hpp"

namespace latsize {

enum class Target { kSimplex, kCube, kWidth };

enum class Algorithm { kFast, kUL, kBrute };

inline const char* to_string(Target t) {
  switch (t) {
    case Target::kSimplex: return "sigma";
    case Target::kCube: return "cube";
    case Target::kWidth: return "width";
  }
  return "?";
}

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kFast: return "fast";
    case Algorithm::kUL: return "ul";
    case Algorithm::kBrute: return "brute";
  }
  return "?";
}

// A computed size together with the unimodular map that witnesses it; the
// self-validating output of every size computation. `verify` re-checks the
// containment (or the width) from scratch.
struct SizeCertificate {
  Target target;
  std::int64_t value = 0;
  AffineMap map;
  Algorithm algorithm;
};

// True iff every transformed point has nonnegative coordinates summing to
// at most l.
inline bool contained_in_simplex_dilate(const Polytope& p, const AffineMap& t, std::int64_t l) {
  if (t.dim() != p.dim()) throw DimensionError("containment: dimension mismatch");
  if (l < 0) return false;
  for (const Vec& x : p.points()) {
    Vec q = t(x);
    std::int64_t sum = 0;
    for (int i = 0; i < q.dim(); ++i) {
      if (q[i] < 0) return false;
      sum = checked_add(sum, q[i]);
    }
    if (sum > l) return false;
  }
  return true;
}

// True iff every transformed coordinate lies in [0, k].
inline bool contained_in_cube_dilate(const Polytope& p, const AffineMap& t, std::int64_t k) {
  if (t.dim() != p.dim()) throw DimensionError("containment: dimension mismatch");
  if (k < 0) return false;
  for (const Vec& x : p.points()) {
    Vec q = t(x);
    for (int i = 0; i < q.dim(); ++i)
      if (q[i] < 0 || q[i] > k) return false;
  }
  return true;
}

inline bool verify(const Polytope& p, const SizeCertificate& cert) {
  switch (cert.target) {
    case Target::kSimplex:
      return contained_in_simplex_dilate(p, cert.map, cert.value);
    case Target::kCube:
      return contained_in_cube_dilate(p, cert.map, cert.value);
    case Target::kWidth:
      return width(p, cert.map.matrix().row(0)) == cert.value;
  }
  return false;
}

}  // namespace latsize
