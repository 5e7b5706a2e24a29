#pragma once

#include "purecomplex/bignum.hpp"
#include "purecomplex/bitmask.hpp"
#include "purecomplex/counting.hpp"
#include "purecomplex/errors.hpp"
#include "purecomplex/simplicial_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace purecomplex {

enum class ComplexFilter { none, clique, clique_tif };

/// Description of one brute-force pass over the p-pure complexes with q
/// facets.  The space is, per vertex count n, the q-subsets of the p-subsets
/// of [n] whose union covers [n].
struct EnumerationTask {
  int p = 1;
  int q = 1;
  std::optional<int> n_min;  // defaults to min_vertices(p, q)
  std::optional<int> n_max;  // defaults to p*q
  ComplexFilter filter = ComplexFilter::none;
  std::uint64_t budget = 100'000'000;  // candidate subsets allowed per n
  int threads = 1;
};

struct EnumerationCounts {
  std::vector<std::pair<int, std::uint64_t>> per_n;
  std::uint64_t total = 0;
};

namespace detail {

/// Clique test on facet masks: for every triple, the union of pairwise
/// intersections must lie inside some facet.
inline bool clique_by_masks(const std::vector<Mask>& fs) {
  std::size_t q = fs.size();
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      for (std::size_t k = j + 1; k < q; ++k) {
        Mask u = (fs[i] & fs[j]) | (fs[i] & fs[k]) | (fs[j] & fs[k]);
        if (!u) continue;
        bool face = false;
        for (std::size_t m = 0; m < q && !face; ++m)
          face = (u & ~fs[m]) == 0;
        if (!face) return false;
      }
  return true;
}

inline bool triangle_intersection_free_by_masks(const std::vector<Mask>& fs) {
  std::size_t q = fs.size();
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      for (std::size_t k = j + 1; k < q; ++k)
        if ((fs[j] & fs[k] & ~fs[i]) && (fs[i] & fs[k] & ~fs[j]) &&
            (fs[i] & fs[j] & ~fs[k]))
          return false;
  return true;
}

inline bool passes_filter(const std::vector<Mask>& fs, ComplexFilter f) {
  switch (f) {
    case ComplexFilter::none:
      return true;
    case ComplexFilter::clique:
      return clique_by_masks(fs);
    case ComplexFilter::clique_tif:
      return clique_by_masks(fs) && triangle_intersection_free_by_masks(fs);
  }
  return false;
}

/// All p-subsets of [n] as masks, lexicographic by subset.
inline std::vector<Mask> p_subset_masks(int p, int n) {
  std::vector<Mask> out;
  if (p > n) return out;
  auto idx = first_k_subset(p);
  do {
    Mask m = 0;
    for (int b : idx) m |= Mask{1} << b;
    out.push_back(m);
  } while (next_k_subset(idx, n));
  return out;
}

inline SimplicialComplex complex_from_masks(const std::vector<Mask>& fs) {
  std::vector<SimplicialComplex::Facet> facets;
  facets.reserve(fs.size());
  for (Mask m : fs) {
    SimplicialComplex::Facet f;
    for (int b : mask_bits(m)) f.push_back(b + 1);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(facets));
}

inline void validate_task(const EnumerationTask& t, int& n_lo, int& n_hi) {
  if (t.p < 1 || t.q < 1)
    throw std::invalid_argument("enumeration: p and q must be at least 1");
  int n0 = min_vertices(t.p, t.q);
  n_lo = t.n_min.value_or(n0);
  n_hi = t.n_max.value_or(t.p * t.q);
  if (n_lo < n0 || n_hi > t.p * t.q || n_lo > n_hi)
    throw std::invalid_argument("enumeration: n range must sit inside [" +
                                std::to_string(n0) + ", " +
                                std::to_string(t.p * t.q) + "]");
  if (n_hi > 63)
    throw std::invalid_argument("enumeration: vertex counts beyond 63 unsupported");
}

/// Walks the q-subsets of `combos` whose first element index is congruent to
/// `offset` mod `stride`, in lexicographic order, calling visit(fs) on every
/// candidate whose union covers [n].  visit returns false to stop.
template <typename Visit>
void scan_candidates(const std::vector<Mask>& combos, int q, Mask full,
                     int offset, int stride, Visit&& visit) {
  int c = static_cast<int>(combos.size());
  if (q > c) return;
  std::vector<int> idx(static_cast<std::size_t>(q));
  std::vector<Mask> fs(static_cast<std::size_t>(q));
  for (int i0 = offset; i0 <= c - q; i0 += stride) {
    for (int t = 0; t < q; ++t) idx[static_cast<std::size_t>(t)] = i0 + t;
    for (;;) {
      Mask cover = 0;
      for (int t = 0; t < q; ++t) {
        fs[static_cast<std::size_t>(t)] = combos[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
        cover |= fs[static_cast<std::size_t>(t)];
      }
      if (cover == full && !visit(fs)) return;
      int pos = q - 1;
      while (pos >= 1 && idx[static_cast<std::size_t>(pos)] == c - q + pos) --pos;
      if (pos == 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int t = pos + 1; t < q; ++t)
        idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
}

}  // namespace detail

/// Total number of candidate q-subsets the task will visit, before any
/// coverage or filter test.
inline Int projected_work(const EnumerationTask& task) {
  int n_lo = 0, n_hi = 0;
  detail::validate_task(task, n_lo, n_hi);
  Int total = 0;
  for (int n = n_lo; n <= n_hi; ++n)
    total += binomial(binomial(n, task.p), task.q);
  return total;
}

/// Exact per-n counts.  Refuses up front when any single n would exceed the
/// candidate budget.  Threaded by striding the first facet index; per-n
/// totals are summed, so results are schedule-independent.
inline EnumerationCounts enumerate_count(const EnumerationTask& task) {
  int n_lo = 0, n_hi = 0;
  detail::validate_task(task, n_lo, n_hi);
  for (int n = n_lo; n <= n_hi; ++n) {
    Int proj = binomial(binomial(n, task.p), task.q);
    if (proj > task.budget)
      throw budget_exceeded(
          "enumeration budget exceeded at n = " + std::to_string(n) + ": " +
              proj.str() + " candidates (budget " + std::to_string(task.budget) +
              ")",
          projected_work(task));
  }

  int workers = std::clamp(task.threads, 1, 64);
  EnumerationCounts out;
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<Mask> combos = detail::p_subset_masks(task.p, n);
    Mask full = full_mask(n);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    auto work = [&](int w) {
      std::uint64_t local = 0;
      detail::scan_candidates(combos, task.q, full, w, workers,
                              [&](const std::vector<Mask>& fs) {
                                if (detail::passes_filter(fs, task.filter))
                                  ++local;
                                return true;
                              });
      partial[static_cast<std::size_t>(w)] = local;
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    std::uint64_t count = 0;
    for (std::uint64_t c : partial) count += c;
    out.per_n.emplace_back(n, count);
    out.total += count;
  }
  return out;
}

/// Single-threaded lexicographic stream of the surviving complexes; the
/// callback returns false to stop early.  Order: ascending n, then
/// lexicographic q-subsets.
inline void enumerate_stream(
    const EnumerationTask& task,
    const std::function<bool(const SimplicialComplex&)>& visit) {
  int n_lo = 0, n_hi = 0;
  detail::validate_task(task, n_lo, n_hi);
  for (int n = n_lo; n <= n_hi; ++n) {
    Int proj = binomial(binomial(n, task.p), task.q);
    if (proj > task.budget)
      throw budget_exceeded(
          "enumeration budget exceeded at n = " + std::to_string(n) + ": " +
              proj.str() + " candidates (budget " + std::to_string(task.budget) +
              ")",
          projected_work(task));
  }
  bool stop = false;
  for (int n = n_lo; n <= n_hi && !stop; ++n) {
    std::vector<Mask> combos = detail::p_subset_masks(task.p, n);
    detail::scan_candidates(combos, task.q, full_mask(n), 0, 1,
                            [&](const std::vector<Mask>& fs) {
                              if (!detail::passes_filter(fs, task.filter))
                                return true;
                              if (!visit(detail::complex_from_masks(fs))) {
                                stop = true;
                                return false;
                              }
                              return true;
                            });
  }
}

/// Direct count of k x m 0/1 matrices (p ones per row, no zero column) over
/// m in [p, p*k] — the brute-force oracle for alignments(p, k).
inline Int enumerate_alignments(int p, int k,
                                std::uint64_t budget = 100'000'000) {
  detail::require_positive("p", p);
  detail::require_positive("k", k);
  if (p * k > 63)
    throw std::invalid_argument("alignment enumeration: p*k beyond 63 unsupported");
  Int projected = 0;
  for (int m = p; m <= p * k; ++m) {
    Int rows = binomial(m, p);
    Int tuples = 1;
    for (int t = 0; t < k; ++t) tuples *= rows;
    projected += tuples;
  }
  if (projected > budget)
    throw budget_exceeded("alignment enumeration budget exceeded: " +
                              projected.str() + " candidates (budget " +
                              std::to_string(budget) + ")",
                          projected);

  Int total = 0;
  for (int m = p; m <= p * k; ++m) {
    std::vector<Mask> rows = detail::p_subset_masks(p, m);
    Mask full = full_mask(m);
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    for (;;) {
      Mask cover = 0;
      for (std::size_t r : pick) cover |= rows[r];
      if (cover == full) ++total;
      std::size_t pos = static_cast<std::size_t>(k);
      while (pos > 0) {
        --pos;
        if (++pick[pos] < rows.size()) break;
        pick[pos] = 0;
        if (pos == 0) goto next_m;
      }
    }
  next_m:;
  }
  return total;
}

namespace detail {

/// Unbiased uniform draw in [0, bound); implementation-defined distributions
/// from <random> are avoided so sequences are identical across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace detail

struct SampleOptions {
  std::uint64_t max_attempts = 1'000'000;
};

/// Rejection-samples a uniform complex from the (p, q) enumeration space —
/// uniform n in range, then a uniform q-subset of the p-subsets — until one
/// covers [n], is a clique complex, and is triangle-intersection-free.
/// Deterministic for a fixed seed.
inline SimplicialComplex random_pure_clique_tif(int p, int q,
                                                std::uint64_t seed,
                                                const SampleOptions& opts = {}) {
  detail::require_positive("p", p);
  detail::require_positive("q", q);
  int n_lo = min_vertices(p, q);
  int n_hi = p * q;
  if (n_hi > 63)
    throw std::invalid_argument("sampling: vertex counts beyond 63 unsupported");

  std::mt19937_64 rng(seed);
  std::map<int, std::vector<Mask>> combos_by_n;
  for (std::uint64_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    int n = n_lo + static_cast<int>(detail::uniform_below(
                       rng, static_cast<std::uint64_t>(n_hi - n_lo + 1)));
    auto [it, fresh] = combos_by_n.try_emplace(n);
    if (fresh) it->second = detail::p_subset_masks(p, n);
    const std::vector<Mask>& combos = it->second;
    std::uint64_t c = combos.size();
    if (c < static_cast<std::uint64_t>(q)) continue;

    // Floyd's subset sampling: uniform q-subset of [c].
    std::vector<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(q));
    for (std::uint64_t j = c - static_cast<std::uint64_t>(q); j < c; ++j) {
      std::uint64_t t = detail::uniform_below(rng, j + 1);
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
        chosen.push_back(t);
      else
        chosen.push_back(j);
    }
    std::sort(chosen.begin(), chosen.end());

    std::vector<Mask> fs;
    fs.reserve(static_cast<std::size_t>(q));
    for (std::uint64_t i : chosen) fs.push_back(combos[static_cast<std::size_t>(i)]);
    Mask cover = 0;
    for (Mask f : fs) cover |= f;
    if (cover != full_mask(n)) continue;
    if (!detail::clique_by_masks(fs)) continue;
    if (!detail::triangle_intersection_free_by_masks(fs)) continue;
    return detail::complex_from_masks(fs);
  }
  throw budget_exceeded(
      "sampling gave up after " + std::to_string(opts.max_attempts) +
          " attempts with no accepted complex for p=" + std::to_string(p) +
          ", q=" + std::to_string(q),
      Int(opts.max_attempts));
}

}  // namespace purecomplex
