#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace purecomplex {

/// Exact arbitrary-precision integer used for every count in the library.
using Int = boost::multiprecision::cpp_int;

/// Exact rational; only the truncated-series evaluator needs one.
using Rat = boost::multiprecision::cpp_rational;

/// C(n, k), with the convention C(n, k) = 0 whenever k < 0 or n < k.
inline Int binomial(const Int& n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  std::int64_t m = k;
  if (n - k < k) m = static_cast<std::int64_t>(n - k);
  Int r = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    r *= n - m + i;
    r /= i;  // exact: r is C(n - m + i, i) after each step
  }
  return r;
}

inline Int binomial(std::int64_t n, std::int64_t k) { return binomial(Int(n), k); }

inline Int factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// 2^e for nonnegative e.  Refuses exponents past 10^8 bits.
inline Int pow2(const Int& e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  if (e > 100'000'000) throw std::overflow_error("pow2: exponent too large");
  return Int(1) << static_cast<unsigned>(e);
}

}  // namespace purecomplex
