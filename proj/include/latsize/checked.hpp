#pragma once

#include <cstdint>
#include <numeric>

#include "latsize/errors.hpp"

namespace latsize {

// All coordinate arithmetic goes through these helpers: a result outside
// int64 range throws OverflowError instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

// g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g.
inline std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                                 std::int64_t& y) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, cur_x = 0;
  std::int64_t old_y = 0, cur_y = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t;
    t = checked_sub(old_r, checked_mul(q, r)), old_r = r, r = t;
    t = checked_sub(old_x, checked_mul(q, cur_x)), old_x = cur_x, cur_x = t;
    t = checked_sub(old_y, checked_mul(q, cur_y)), old_y = cur_y, cur_y = t;
  }
  if (old_r < 0) {
    old_r = checked_neg(old_r);
    old_x = checked_neg(old_x);
    old_y = checked_neg(old_y);
  }
  x = old_x;
  y = old_y;
  return old_r;
}

}  // namespace latsize
