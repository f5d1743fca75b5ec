#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "latsize/errors.hpp"

namespace latsize {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(BigInt(num), BigInt(den)); }

// Rational u >= sqrt(s), exact when s is a perfect square, otherwise within
// ~1e-12 relative error (Newton from above, error squares each step).
inline Rat sqrt_upper_bound(const BigInt& s) {
  if (s < 0) throw Error("sqrt_upper_bound: negative argument");
  if (s == 0) return Rat(0);
  BigInt t = boost::multiprecision::sqrt(s);  // floor of the square root
  if (t * t == s) return Rat(t);
  Rat u(t + 1);
  for (int i = 0; i < 3; ++i) u = (u * u + s) / (2 * u);
  return u;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace latsize
