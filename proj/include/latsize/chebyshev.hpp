#pragma once

#include <vector>

#include "latsize/polytope.hpp"
#include "latsize/rational.hpp"

namespace latsize {

namespace detail {

// One LP constraint: coeffs . y >= rhs over y = (center..., radius).
struct LpRow {
  std::vector<Rat> coeffs;
  Rat rhs;
};

// Solve the square system rows[i].coeffs . y = rows[i].rhs by rational
// Gaussian elimination; false when singular.
inline bool solve_square(const std::vector<LpRow>& rows, std::vector<Rat>& y) {
  const std::size_t n = rows.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i].coeffs[j];
    a[i][n] = rows[i].rhs;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  y.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) y[i] = a[i][n] / a[i][i];
  return true;
}

}  // namespace detail

// Exact rational lower bound on the largest inscribed-ball radius, via the
// Chebyshev-center LP over the facet halfspaces:
//
//     maximize r  s.t.  n_i . x - u_i r >= c_i,  0 <= r <= box
//
// where u_i is a rational upper bound on |n_i| (so the optimum is a valid
// inscribed ball, slightly below the true Chebyshev radius when |n_i| is
// irrational). Solved by enumerating basic solutions; the LP has dim+1
// variables and the constraint count is the facet count plus two.
inline Rat inradius_lower_bound(const Polytope& p) {
  if (!p.full_dimensional())
    throw DegeneracyError("inradius_lower_bound: polytope is not full-dimensional",
                          p.affine_rank());
  const int d = p.dim();
  const std::size_t nvars = static_cast<std::size_t>(d) + 1;

  std::vector<detail::LpRow> rows;
  for (const Facet& f : p.facets()) {
    detail::LpRow row;
    row.coeffs.resize(nvars);
    for (int i = 0; i < d; ++i) row.coeffs[static_cast<std::size_t>(i)] = Rat(f.normal[i]);
    row.coeffs[nvars - 1] = -sqrt_upper_bound(BigInt(norm_sq(f.normal)));
    row.rhs = Rat(f.offset);
    rows.push_back(std::move(row));
  }
  // r >= 0 and r <= half the largest box extent keep the region bounded.
  Vec lo = min_corner(p), hi = max_corner(p);
  std::int64_t extent = 0;
  for (int i = 0; i < d; ++i) extent = std::max(extent, checked_sub(hi[i], lo[i]));
  {
    detail::LpRow row;
    row.coeffs.assign(nvars, Rat(0));
    row.coeffs[nvars - 1] = Rat(1);
    row.rhs = Rat(0);
    rows.push_back(row);
    row.coeffs[nvars - 1] = Rat(-1);
    row.rhs = -rat(extent);
    rows.push_back(row);
  }

  const std::size_t m = rows.size();
  Rat best(-1);
  std::vector<std::size_t> idx(nvars);
  std::vector<Rat> y;
  // Enumerate all (d+1)-subsets of constraints as active sets.
  std::vector<std::size_t> comb(nvars);
  for (std::size_t i = 0; i < nvars; ++i) comb[i] = i;
  while (true) {
    std::vector<detail::LpRow> sys;
    for (std::size_t i : comb) sys.push_back(rows[i]);
    if (detail::solve_square(sys, y)) {
      bool feasible = true;
      for (const auto& row : rows) {
        Rat lhs(0);
        for (std::size_t j = 0; j < nvars; ++j) lhs += row.coeffs[j] * y[j];
        if (lhs < row.rhs) {
          feasible = false;
          break;
        }
      }
      if (feasible && y[nvars - 1] > best) best = y[nvars - 1];
    }
    // next combination
    std::size_t k = nvars;
    while (k > 0 && comb[k - 1] == m - nvars + (k - 1)) --k;
    if (k == 0) break;
    ++comb[k - 1];
    for (std::size_t j = k; j < nvars; ++j) comb[j] = comb[j - 1] + 1;
  }

  if (best <= 0)
    throw InternalError("inradius_lower_bound: no inscribed ball found for full-dimensional input");
  return best;
}

}  // namespace latsize
