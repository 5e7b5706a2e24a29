#pragma once

#include "purecomplex/bignum.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

namespace detail {

inline void require_positive(const char* name, std::int64_t v) {
  if (v < 1)
    throw std::invalid_argument(std::string(name) + " must be at least 1");
}

}  // namespace detail

/// Smallest vertex count on which q facets of size p fit: min{n : C(n,p) >= q}.
inline int min_vertices(int p, std::int64_t q) {
  detail::require_positive("p", p);
  detail::require_positive("q", q);
  int n = p;
  while (binomial(n, p) < q) ++n;
  return n;
}

/// Number of p-pure complexes with q facets covering exactly n labeled
/// vertices: alternating binomial sum over sub-vertex-sets.
inline Int s_pure(int p, int q, int n) {
  detail::require_positive("p", p);
  detail::require_positive("q", q);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Int total = 0;
  for (int k = 0; k <= n; ++k) {
    Int term = binomial(n, k) * binomial(binomial(k, p), q);
    if ((k + n) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Total over all vertex counts; nonzero terms live in n0..p*q.
inline Int s_pure_total(int p, int q) {
  detail::require_positive("p", p);
  detail::require_positive("q", q);
  Int total = 0;
  for (int n = min_vertices(p, q); n <= p * q; ++n) total += s_pure(p, q, n);
  return total;
}

/// p-pure complexes with any number of facets covering exactly n vertices.
inline Int s_pure_by_vertices(int p, int n) {
  detail::require_positive("p", p);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Int total = 0;
  for (int k = 0; k <= n; ++k) {
    Int term = binomial(n, k) * pow2(binomial(k, p));
    if ((k + n) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Evaluates sum_{m>=0} 2^-(m+1) C(C(m,p), q) in exact rational arithmetic.
/// Truncation is certified: once C(m,p) >= q, consecutive-term ratios are
/// bounded by ((m+1)/(m+1-p))^q * (C(m,p)/(C(m,p)-q+1))^q / 2, and when that
/// bound r stays below 1 the geometric tail t*r/(1-r) applies.  We stop as
/// soon as the tail is provably < tolerance (default 1/2, which makes
/// rounding to the nearest integer exact).
inline Int s_pure_series(int p, int q, const Rat& tolerance = Rat(1, 2)) {
  detail::require_positive("p", p);
  detail::require_positive("q", q);
  if (tolerance <= 0 || tolerance > Rat(1, 2))
    throw std::invalid_argument("series tolerance must be in (0, 1/2]");
  Rat sum = 0;
  for (int m = 0;; ++m) {
    if (m > 1'000'000)
      throw std::runtime_error("series failed to certify convergence");
    Int cmp = binomial(m, p);
    Int num = binomial(cmp, q);
    Rat term(num, pow2(m + 1));
    sum += term;
    if (m < p || cmp < q) continue;
    Rat ratio = Rat(Int(m) + 1, Int(m) + 1 - p) * Rat(cmp, cmp - (q - 1));
    Rat bound = 1;
    for (int t = 0; t < q; ++t) bound *= ratio;
    bound /= 2;
    if (bound >= 1) continue;
    Rat tail = term * bound / (1 - bound);
    if (tail < tolerance) {
      Int n = boost::multiprecision::numerator(sum);
      Int d = boost::multiprecision::denominator(sum);
      return (2 * n + d) / (2 * d);  // nearest integer; sum is nonnegative
    }
  }
}

enum class StirlingKind { first_signed, second };

/// Triangular table of Stirling numbers built by the row recurrences
///   s(n+1,k) = s(n,k-1) - n*s(n,k)   (signed first kind)
///   S(n+1,k) = S(n,k-1) + k*S(n,k)   (second kind)
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, int n_max) : kind_(kind) {
    if (n_max < 0) throw std::invalid_argument("stirling: n_max must be >= 0");
    rows_.reserve(static_cast<std::size_t>(n_max) + 1);
    rows_.push_back({Int(1)});  // row 0
    for (int n = 0; n < n_max; ++n) {
      const auto& prev = rows_.back();
      std::vector<Int> row(static_cast<std::size_t>(n) + 2, Int(0));
      for (int k = 1; k <= n + 1; ++k) {
        Int from_prev = k <= n ? prev[static_cast<std::size_t>(k)] : Int(0);
        row[static_cast<std::size_t>(k)] =
            prev[static_cast<std::size_t>(k - 1)] +
            (kind_ == StirlingKind::first_signed ? Int(-n) * from_prev
                                                 : Int(k) * from_prev);
      }
      rows_.push_back(std::move(row));
    }
  }

  StirlingKind kind() const { return kind_; }
  int size() const { return static_cast<int>(rows_.size()) - 1; }

  /// 0 outside the triangle.
  Int value(int n, int k) const {
    if (n < 0 || n > size() || k < 0 || k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  StirlingKind kind_;
  std::vector<std::vector<Int>> rows_;
};

inline StirlingTable stirling(StirlingKind kind, int n_max) {
  return StirlingTable(kind, n_max);
}

/// Closed form for the number of alignments of k strips of length p: k x m
/// 0/1 matrices (p <= m <= p*k) with p ones per row and no zero column.
inline Int alignments(int p, int k) {
  detail::require_positive("p", p);
  detail::require_positive("k", k);
  Int total = 0;
  for (int n = p; n <= p * k; ++n)
    for (int i = 0; i <= n; ++i) {
      Int rows = binomial(n - i, p);
      Int term = binomial(n, i);
      Int power = 1;
      for (int t = 0; t < k; ++t) power *= rows;
      term *= power;
      if (i % 2 == 0)
        total += term;
      else
        total -= term;
    }
  return total;
}

/// Checks both Stirling identities linking alignments to pure-complex counts,
/// for every q up to q_max:
///   q! * s_pure_total(p,q) = sum_k s(q,k) * f(p,k)
///   f(p,q) = sum_j S(q,j) * j! * s_pure_total(p,j)
inline bool alignment_identity_check(int p, int q_max) {
  detail::require_positive("p", p);
  detail::require_positive("q_max", q_max);
  StirlingTable first(StirlingKind::first_signed, q_max);
  StirlingTable second(StirlingKind::second, q_max);
  std::vector<Int> f(static_cast<std::size_t>(q_max) + 1);
  std::vector<Int> t(static_cast<std::size_t>(q_max) + 1);
  for (int j = 1; j <= q_max; ++j) {
    f[static_cast<std::size_t>(j)] = alignments(p, j);
    t[static_cast<std::size_t>(j)] = factorial(j) * s_pure_total(p, j);
  }
  for (int q = 1; q <= q_max; ++q) {
    Int lhs = 0;
    for (int k = 1; k <= q; ++k)
      lhs += first.value(q, k) * f[static_cast<std::size_t>(k)];
    if (lhs != t[static_cast<std::size_t>(q)]) return false;
    Int rhs = 0;
    for (int j = 1; j <= q; ++j)
      rhs += second.value(q, j) * t[static_cast<std::size_t>(j)];
    if (f[static_cast<std::size_t>(q)] != rhs) return false;
  }
  return true;
}

/// Minimum n with prod_{i=1}^{p} floor((n+i-1)/p) >= q: the vertex count of
/// the smallest balanced complete p-partite graph with q maximal p-cliques.
inline Int turan_number(int p, std::int64_t q) {
  detail::require_positive("p", p);
  detail::require_positive("q", q);
  for (int n = p;; ++n) {
    Int prod = 1;
    for (int i = 1; i <= p; ++i) prod *= (n + i - 1) / p;
    if (prod >= q) return n;
  }
}

/// Upper bound on the number of p-pure clique complexes with q facets: total
/// pure complexes on at least the Turán minimum number of vertices.
inline Int clique_upper_bound(int p, int q) {
  detail::require_positive("p", p);
  detail::require_positive("q", q);
  int start = static_cast<int>(turan_number(p, q));
  Int total = 0;
  for (int n = start; n <= p * q; ++n) total += s_pure(p, q, n);
  return total;
}

}  // namespace purecomplex
