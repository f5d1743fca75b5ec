#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "latsize/certificate.hpp"
#include "latsize/chebyshev.hpp"
#include "latsize/polytope.hpp"
#include "latsize/rational.hpp"
#include "latsize/size2d.hpp"

namespace latsize {

struct SearchOptions {
  std::size_t pool_limit = 1'000'000;
};

// Inradius-derived bound data: any primitive direction with norm above
// (l-1)/(2R) has width above l-1 and cannot be a row of a matrix placing P
// inside the (l-1)-dilate.
struct SearchBound {
  Rat inradius;   // R
  std::int64_t l; // current best size + 1
  Rat norm_cap;   // (l-1)/(2R)
};

inline SearchBound make_search_bound(const Rat& inradius, std::int64_t best_value) {
  return SearchBound{inradius, best_value + 1, rat(best_value) / (2 * inradius)};
}

// All primitive vectors with norm <= cap, one representative per +-pair
// (first nonzero entry positive), in lexicographic order. Throws
// ResourceLimitError when the pool (or the raw scan) would exceed the
// configured limit.
inline std::vector<Vec> enumerate_primitive(int dim, const Rat& norm_cap,
                                            std::size_t pool_limit = SearchOptions{}.pool_limit) {
  require_dim(dim);
  if (norm_cap < 1) throw Error("enumerate_primitive: norm cap must be at least 1");
  BigInt mb = boost::multiprecision::numerator(norm_cap) /
              boost::multiprecision::denominator(norm_cap);
  BigInt budget = BigInt(64) * pool_limit + 10'000'000;
  BigInt cells = 1;
  for (int i = 0; i < dim; ++i) cells *= 2 * mb + 1;
  if (cells > budget)
    throw ResourceLimitError("enumerate_primitive: norm cap " + norm_cap.str() +
                             " requires scanning " + cells.str() + " lattice cells");
  const std::int64_t m = mb.convert_to<std::int64_t>();

  Rat cap_sq = norm_cap * norm_cap;
  BigInt cap_sq_floor = boost::multiprecision::numerator(cap_sq) /
                        boost::multiprecision::denominator(cap_sq);
  std::int64_t max_norm_sq = cap_sq_floor > std::numeric_limits<std::int64_t>::max()
                                 ? std::numeric_limits<std::int64_t>::max()
                                 : cap_sq_floor.convert_to<std::int64_t>();

  std::vector<Vec> out;
  Vec v(dim);
  std::vector<std::int64_t> coord(static_cast<std::size_t>(dim), -m);
  for (;;) {
    for (int i = 0; i < dim; ++i) v[i] = coord[static_cast<std::size_t>(i)];
    if (!v.is_zero() && has_canonical_sign(v) && norm_sq(v) <= max_norm_sq &&
        content(v) == 1) {
      if (out.size() >= pool_limit)
        throw ResourceLimitError("enumerate_primitive: pool exceeds limit of " +
                                 std::to_string(pool_limit) + " vectors");
      out.push_back(v);
    }
    int i = dim - 1;
    while (i >= 0 && coord[static_cast<std::size_t>(i)] == m) coord[static_cast<std::size_t>(i--)] = -m;
    if (i < 0) break;
    ++coord[static_cast<std::size_t>(i)];
  }
  return out;
}

// max of the coordinate sum minus the sum of the coordinate minima; the
// n-dimensional l1 quantity. Translation-invariant.
inline std::int64_t l1_nd(const Polytope& p) {
  Vec ones(p.dim());
  for (int i = 0; i < p.dim(); ++i) ones[i] = 1;
  std::int64_t val = support(p, ones);
  for (int i = 0; i < p.dim(); ++i)
    val = checked_add(val, support(p, -Vec::unit(p.dim(), i)));  // support(-e_i) = -min x_i
  return val;
}

// Minimum of l1 over all sign-diagonal images, with witness; ties resolved
// by the sign_diagonals enumeration order.
inline NaiveSize nls_sigma_nd(const Polytope& p) {
  NaiveSize best;
  bool have = false;
  for (const Mat& d : sign_diagonals(p.dim())) {
    std::int64_t val = l1_nd(transformed(p, d));
    if (!have || val < best.value) {
      best.value = val;
      best.diagonal = d;
      have = true;
    }
  }
  best.translation = -min_corner(transformed(p, best.diagonal));
  return best;
}

namespace detail {

struct PoolEntry {
  Vec v;
  std::int64_t sup_plus;   // support(P, v)
  std::int64_t sup_minus;  // support(P, -v)
  std::int64_t width;
  bool alive = true;
};

inline std::int64_t subset_det(const std::vector<PoolEntry>& pool, const int* idx, int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.row(i) = pool[static_cast<std::size_t>(idx[i])].v;
  return det(m);
}

}  // namespace detail

// Exhaustive lattice-size search: candidate rows are the primitive vectors
// surviving the inradius norm bound and the width bound for l = best + 1,
// so matrices tying the best value are never pruned away and the reported
// witness is schedule-independent. Candidate matrices are every row order
// (in dimension 2 a single order, since l1 does not depend on it) and every
// row-sign assignment of every |det| = 1 subset. Returns the minimum by
// (value, lexicographic matrix).
inline SizeCertificate brute_force_ls(const Polytope& input, Target target,
                                      const SearchOptions& opts = {}) {
  if (target == Target::kWidth)
    throw Error("brute_force_ls: use lattice_width_search for the width target");
  if (input.is_point() || input.is_segment())
    return degenerate_certificate(input, target, Algorithm::kBrute);
  if (input.dim() != 2 && input.dim() != 3)
    throw DimensionError("brute_force_ls: dimension must be 2 or 3");
  if (!input.full_dimensional())
    throw DegeneracyError("brute_force_ls: polytope is not full-dimensional",
                          input.affine_rank());

  const int n = input.dim();
  auto [p, shift] = translate_min_to_origin(input);
  const std::vector<Vec>& pts = p.points();

  std::int64_t best_value =
      target == Target::kSimplex ? nls_sigma_nd(p).value : nls_square(p);
  std::optional<Mat> best_matrix;
  const Rat inradius = inradius_lower_bound(p);

  SearchBound bound = make_search_bound(inradius, best_value);
  std::vector<detail::PoolEntry> pool;
  for (const Vec& v : enumerate_primitive(n, bound.norm_cap, opts.pool_limit)) {
    detail::PoolEntry e{v, support(p, v), support(p, -v), 0, true};
    e.width = checked_add(e.sup_plus, e.sup_minus);
    if (e.width <= best_value) pool.push_back(std::move(e));
  }

  auto reprune = [&]() {
    bound = make_search_bound(inradius, best_value);
    Rat cap_sq = bound.norm_cap * bound.norm_cap;
    for (auto& e : pool)
      if (e.alive && (e.width > best_value || Rat(norm_sq(e.v)) > cap_sq)) e.alive = false;
  };

  // Row orders to try: all permutations in 3D, the pool order alone in 2D.
  std::vector<std::vector<int>> perms;
  if (n == 2) {
    perms = {{0, 1}};
  } else {
    std::vector<int> base{0, 1, 2};
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
  }

  Vec sum_row(n);
  int idx[3] = {0, 0, 0};
  auto consider = [&](const Mat& a, std::int64_t value) {
    if (value < best_value || (value == best_value && (!best_matrix || a < *best_matrix))) {
      bool improved = value < best_value;
      best_value = value;
      best_matrix = a;
      if (improved) reprune();
    }
  };

  auto scan_subset = [&]() {
    if (target == Target::kCube) {
      std::int64_t value = 0;
      for (int i = 0; i < n; ++i)
        value = std::max(value, pool[static_cast<std::size_t>(idx[i])].width);
      if (value > best_value) return;
      // Box size ignores order and signs; arrangements only settle the
      // lexicographic witness.
      for (const auto& perm : perms)
        for (unsigned sg = 0; sg < (1u << n); ++sg) {
          Mat a(n);
          for (int i = 0; i < n; ++i) {
            const Vec& v = pool[static_cast<std::size_t>(idx[perm[static_cast<std::size_t>(i)]])].v;
            a.row(i) = (sg >> i) & 1u ? -v : v;
          }
          consider(a, value);
        }
      return;
    }
    // Third-direction filter (2D): a matrix beating or tying the best has
    // row-sum width within the bound as well, so mismatching sign pairs can
    // be skipped outright.
    std::int64_t w_sum = -1, w_diff = -1;
    if (n == 2) {
      const Vec& u = pool[static_cast<std::size_t>(idx[0])].v;
      const Vec& v = pool[static_cast<std::size_t>(idx[1])].v;
      w_sum = width(p, u + v);
      w_diff = width(p, u - v);
      if (w_sum > best_value && w_diff > best_value) return;
    }
    for (const auto& perm : perms)
      for (unsigned sg = 0; sg < (1u << n); ++sg) {
        if (n == 2) {
          std::int64_t w_rowsum = (sg == 0 || sg == 3) ? w_sum : w_diff;
          if (w_rowsum > best_value) continue;
        }
        Mat a(n);
        std::int64_t min_total = 0;
        for (int i = 0; i < n; ++i) {
          const auto& e = pool[static_cast<std::size_t>(idx[perm[static_cast<std::size_t>(i)]])];
          bool neg = (sg >> i) & 1u;
          a.row(i) = neg ? -e.v : e.v;
          min_total = checked_add(min_total, neg ? -e.sup_plus : -e.sup_minus);
        }
        for (int i = 0; i < n; ++i) {
          std::int64_t s = 0;
          for (int k = 0; k < n; ++k) s = checked_add(s, a(k, i));
          sum_row[i] = s;
        }
        std::int64_t max_sum = std::numeric_limits<std::int64_t>::min();
        for (const Vec& x : pts) max_sum = std::max(max_sum, dot(sum_row, x));
        consider(a, checked_sub(max_sum, min_total));
      }
  };

  const int pool_size = static_cast<int>(pool.size());
  for (idx[0] = 0; idx[0] < pool_size; ++idx[0]) {
    if (!pool[static_cast<std::size_t>(idx[0])].alive) continue;
    for (idx[1] = idx[0] + 1; idx[1] < pool_size; ++idx[1]) {
      if (!pool[static_cast<std::size_t>(idx[1])].alive) continue;
      if (n == 2) {
        std::int64_t d = detail::subset_det(pool, idx, 2);
        if (d == 1 || d == -1) scan_subset();
        continue;
      }
      for (idx[2] = idx[1] + 1; idx[2] < pool_size; ++idx[2]) {
        if (!pool[static_cast<std::size_t>(idx[2])].alive) continue;
        std::int64_t d = detail::subset_det(pool, idx, 3);
        if (d == 1 || d == -1) scan_subset();
      }
    }
  }

  if (!best_matrix)
    throw InternalError("brute_force_ls: search failed to rediscover the naive witness");
  Vec t = -min_corner(transformed(p, *best_matrix));
  AffineMap map(*best_matrix, *best_matrix * shift + t);
  SizeCertificate cert{target, best_value, std::move(map), Algorithm::kBrute};
  if (!verify(input, cert)) throw InternalError("brute_force_ls: certificate failed verification");
  return cert;
}

// Minimum of l1 over all unimodular matrices with entries in a small set
// (default {-1, 0, 1}); witness is the lexicographically smallest minimizer.
struct SmallMatrixScan {
  std::int64_t value = 0;
  Mat matrix;
};

inline SmallMatrixScan min_l1_over_small_matrices(
    const Polytope& p, const std::vector<std::int64_t>& entry_set = {-1, 0, 1}) {
  if (p.dim() != 3) throw DimensionError("min_l1_over_small_matrices: dimension 3 required");
  if (entry_set.empty()) throw Error("min_l1_over_small_matrices: empty entry set");
  std::vector<std::int64_t> entries = entry_set;
  std::sort(entries.begin(), entries.end());
  const std::size_t base = entries.size();
  double total = 1;
  for (int i = 0; i < 9; ++i) total *= static_cast<double>(base);
  if (total > 1e8)
    throw ResourceLimitError("min_l1_over_small_matrices: entry set too large");

  SmallMatrixScan best;
  bool have = false;
  std::size_t count = 1;
  for (int i = 0; i < 9; ++i) count *= base;
  for (std::size_t code = 0; code < count; ++code) {
    Mat a(3);
    std::size_t c = code;
    for (int cell = 8; cell >= 0; --cell) {
      a(cell / 3, cell % 3) = entries[c % base];
      c /= base;
    }
    if (!is_unimodular(a)) continue;
    std::int64_t val = l1_nd(transformed(p, a));
    if (!have || val < best.value) {
      best.value = val;
      best.matrix = a;
      have = true;
    }
  }
  if (!have) throw Error("min_l1_over_small_matrices: no unimodular matrix in entry set");
  return best;
}

// All primitive directions (canonical sign, norm <= cap) whose width is at
// most the bound, in lexicographic order.
inline std::vector<Vec> directions_with_width_at_most(
    const Polytope& p, std::int64_t bound, const Rat& norm_cap,
    std::size_t pool_limit = SearchOptions{}.pool_limit) {
  if (!p.full_dimensional())
    throw DegeneracyError("directions_with_width_at_most: polytope is not full-dimensional",
                          p.affine_rank());
  std::vector<Vec> out;
  for (const Vec& v : enumerate_primitive(p.dim(), norm_cap, pool_limit))
    if (width(p, v) <= bound) out.push_back(v);
  return out;
}

// Minimum width over the capped primitive pool, with the lexicographically
// smallest achieving direction. Exact for full-dimensional P when the cap
// comes from the inradius bound; degenerate inputs report a width-0
// direction rather than an error.
inline std::pair<std::int64_t, Vec> lattice_width_exhaustive(
    const Polytope& p, const Rat& norm_cap,
    std::size_t pool_limit = SearchOptions{}.pool_limit) {
  std::optional<std::pair<std::int64_t, Vec>> best;
  for (const Vec& v : enumerate_primitive(p.dim(), norm_cap, pool_limit)) {
    std::int64_t w = width(p, v);
    if (!best || w < best->first) best = {w, v};
  }
  if (!best) throw InternalError("lattice_width_exhaustive: empty candidate pool");
  return *best;
}

// Lattice width with a self-derived rigorous cap: directions with norm
// above best/(2R) are wider than the best basis width, so the capped scan
// is exhaustive. Degenerate inputs fall back to growing caps until a
// width-0 direction appears.
inline std::pair<std::int64_t, Vec> lattice_width(
    const Polytope& p, std::size_t pool_limit = SearchOptions{}.pool_limit) {
  if (p.full_dimensional()) {
    std::int64_t best = width(p, Vec::unit(p.dim(), 0));
    for (int i = 1; i < p.dim(); ++i)
      best = std::min(best, width(p, Vec::unit(p.dim(), i)));
    Rat cap = rat(best) / (2 * inradius_lower_bound(p));
    return lattice_width_exhaustive(p, cap, pool_limit);
  }
  for (Rat cap(1);; cap *= 2) {
    std::optional<Vec> zero_dir;
    for (const Vec& v : enumerate_primitive(p.dim(), cap, pool_limit))
      if (width(p, v) == 0) {
        zero_dir = v;
        break;  // lexicographic scan: first hit is the smallest
      }
    if (zero_dir) return {0, *zero_dir};
  }
}

// Width certificate: the achieving direction completed to the first row of
// a unimodular matrix.
inline SizeCertificate lattice_width_search(const Polytope& p,
                                            const SearchOptions& opts = {}) {
  auto [w, dir] = lattice_width(p, opts.pool_limit);
  Mat a = inverse_unimodular(map_primitive_to_e1(dir)).transposed();
  if (!(a.row(0) == dir)) throw InternalError("lattice_width_search: completion failed");
  Vec t = -min_corner(transformed(p, a));
  SizeCertificate cert{Target::kWidth, w, AffineMap(a, t), Algorithm::kBrute};
  if (!verify(p, cert))
    throw InternalError("lattice_width_search: certificate failed verification");
  return cert;
}

}  // namespace latsize
