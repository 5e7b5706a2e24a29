#pragma once

#include "purecomplex/bitmask.hpp"
#include "purecomplex/incidence.hpp"
#include "purecomplex/vertex_data.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace purecomplex {

/// Symmetric matrix of pairwise facet-intersection sizes; the diagonal holds
/// the facet sizes.  Construction enforces symmetry, nonnegativity, and the
/// bound Q_ij <= min(Q_ii, Q_jj).
class FacetAdjacencyMatrix {
 public:
  explicit FacetAdjacencyMatrix(const IntMatrix& raw) {
    detail::require_rectangular(raw, "adjacency matrix");
    if (raw.rows != raw.cols || raw.rows < 1)
      throw std::invalid_argument("adjacency matrix: must be square and nonempty");
    for (int i = 0; i < raw.rows; ++i)
      for (int j = 0; j < raw.cols; ++j) {
        std::int64_t v = raw.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (v < 0)
          throw std::invalid_argument("adjacency matrix: negative entry at (" +
                                      std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
        if (v != raw.data[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
          throw std::invalid_argument("adjacency matrix: not symmetric at (" +
                                      std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
      }
    for (int i = 0; i < raw.rows; ++i)
      for (int j = 0; j < raw.cols; ++j)
        if (i != j) {
          std::int64_t v = raw.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          std::int64_t cap = std::min(raw.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)],
                                      raw.data[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
          if (v > cap)
            throw std::invalid_argument(
                "adjacency matrix: entry (" + std::to_string(i + 1) + "," +
                std::to_string(j + 1) + ") exceeds min of diagonal entries");
        }
    data_ = raw.data;
  }

  int facet_count() const { return static_cast<int>(data_.size()); }

  /// 0-based access.
  std::int64_t at(int i, int j) const {
    return data_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }

  IntMatrix to_matrix() const {
    return {facet_count(), facet_count(), data_};
  }

  bool operator==(const FacetAdjacencyMatrix&) const = default;

 private:
  std::vector<std::vector<std::int64_t>> data_;
};

inline FacetAdjacencyMatrix adjacency_from_incidence(const FacetIncidenceMatrix& b) {
  int q = b.facet_count();
  IntMatrix m;
  m.rows = m.cols = q;
  m.data.assign(static_cast<std::size_t>(q),
                std::vector<std::int64_t>(static_cast<std::size_t>(q), 0));
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) {
      std::int64_t s = 0;
      for (int c = 0; c < b.vertex_count(); ++c)
        s += b.rows()[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] &
             b.rows()[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      m.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      m.data[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s;
    }
  return FacetAdjacencyMatrix(m);
}

/// Q as the pattern-weighted sum of rank-1 outer products: Q_ij counts the
/// vertices whose pattern contains both i and j.  Agrees entrywise with
/// adjacency_from_incidence(incidence_from_vertex_data(c)).
inline FacetAdjacencyMatrix adjacency_from_vertex_data(const VertexData& c) {
  auto r = is_realizable_vertex_data(c);
  if (!r.realizable)
    throw std::invalid_argument(
        "vertex data not realizable: facet " + std::to_string(r.i) +
        (c.arity() == 1 ? " is empty"
                        : " would be contained in facet " + std::to_string(r.j)));
  int q = c.arity();
  IntMatrix m;
  m.rows = m.cols = q;
  m.data.assign(static_cast<std::size_t>(q),
                std::vector<std::int64_t>(static_cast<std::size_t>(q), 0));
  for (const auto& [a, cnt] : c.counts())
    for (int i = 0; i < q; ++i) {
      if (!(a >> i & 1)) continue;
      for (int j = 0; j < q; ++j)
        if (a >> j & 1)
          m.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              static_cast<std::int64_t>(cnt);
    }
  return FacetAdjacencyMatrix(m);
}

/// Outcome of the necessary-condition scan on a facet-adjacency matrix.  The
/// subset family Q_ii >= sum_{k in S\{i}} Q_ik - sum_{{a,b} in S\{i}} Q_ab
/// and the strict pairwise bound Q_ij < min(Q_ii, Q_jj) are reported as
/// separate findings; both must hold for Q to come from a complex, but a pass
/// does not guarantee realizability.
struct InequalityReport {
  bool family_holds = true;
  std::vector<int> family_subset;  // first violating S, 1-based, ascending
  int family_index = 0;            // the i in S

  bool strict_pairwise_holds = true;
  int pair_i = 0, pair_j = 0;  // first pair with Q_ij >= min(Q_ii, Q_jj)

  bool passed() const { return family_holds && strict_pairwise_holds; }
};

/// Scans subsets S by size then lexicographic order, and i in S ascending,
/// so the reported witness is deterministic.  max_subset_size caps |S|
/// (default: exhaustive over [q]).
inline InequalityReport check_adjacency_inequalities(
    const FacetAdjacencyMatrix& Q,
    std::optional<int> max_subset_size = std::nullopt) {
  int q = Q.facet_count();
  InequalityReport out;

  int cap = q;
  if (max_subset_size) cap = std::max(0, std::min(q, *max_subset_size));
  for (int size = 2; size <= cap && out.family_holds; ++size) {
    auto idx = first_k_subset(size);
    do {
      for (int t = 0; t < size; ++t) {
        int i = idx[static_cast<std::size_t>(t)];
        std::int64_t rhs = 0;
        for (int u = 0; u < size; ++u) {
          int k = idx[static_cast<std::size_t>(u)];
          if (k != i) rhs += Q.at(i, k);
        }
        for (int u = 0; u < size; ++u)
          for (int v = u + 1; v < size; ++v) {
            int a = idx[static_cast<std::size_t>(u)];
            int b = idx[static_cast<std::size_t>(v)];
            if (a != i && b != i) rhs -= Q.at(a, b);
          }
        if (Q.at(i, i) < rhs) {
          out.family_holds = false;
          for (int u = 0; u < size; ++u)
            out.family_subset.push_back(idx[static_cast<std::size_t>(u)] + 1);
          out.family_index = i + 1;
          break;
        }
      }
      if (!out.family_holds) break;
    } while (next_k_subset(idx, q));
  }

  for (int i = 0; i < q && out.strict_pairwise_holds; ++i)
    for (int j = i + 1; j < q; ++j)
      if (Q.at(i, j) >= std::min(Q.at(i, i), Q.at(j, j))) {
        out.strict_pairwise_holds = false;
        out.pair_i = i + 1;
        out.pair_j = j + 1;
        break;
      }
  return out;
}

enum class SearchVerdict { realizable, not_realizable, undecided };

struct AdjacencySearchOptions {
  int max_facets = 6;                      // refuse larger q as undecided
  std::uint64_t node_budget = 50'000'000;  // backtracking nodes before giving up
};

struct AdjacencyRealizability {
  SearchVerdict verdict = SearchVerdict::undecided;
  std::optional<VertexData> witness;  // present iff realizable
  std::uint64_t nodes = 0;
};

namespace detail {

struct AdjacencySearch {
  int q;
  const FacetAdjacencyMatrix& Q;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<Mask> patterns;                  // popcount desc, then mask asc
  std::vector<std::vector<std::int64_t>> deficit;  // remaining Q to cover
  std::vector<std::vector<std::pair<int, int>>> finished;  // pairs complete after step t
  std::map<Mask, std::uint64_t> chosen;
  std::optional<VertexData> found;

  AdjacencySearch(const FacetAdjacencyMatrix& m, std::uint64_t b)
      : q(m.facet_count()), Q(m), budget(b) {
    for (Mask p = 1; p < (Mask{1} << q); ++p) patterns.push_back(p);
    std::stable_sort(patterns.begin(), patterns.end(), [](Mask a, Mask b) {
      int pa = popcount(a), pb = popcount(b);
      return pa != pb ? pa > pb : a < b;
    });
    deficit.assign(static_cast<std::size_t>(q),
                   std::vector<std::int64_t>(static_cast<std::size_t>(q), 0));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        deficit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Q.at(i, j);
    // Last pattern covering each (i, j) determines when that entry must be
    // exactly met.
    finished.assign(patterns.size(), {});
    for (int i = 0; i < q; ++i)
      for (int j = i; j < q; ++j) {
        Mask need = (Mask{1} << i) | (Mask{1} << j);
        for (int t = static_cast<int>(patterns.size()) - 1; t >= 0; --t)
          if ((patterns[static_cast<std::size_t>(t)] & need) == need) {
            finished[static_cast<std::size_t>(t)].emplace_back(i, j);
            break;
          }
      }
  }

  void apply(Mask m, std::int64_t v) {
    auto bits = mask_bits(m);
    for (int i : bits)
      for (int j : bits)
        deficit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= v;
  }

  bool closed_ok(int t) const {
    for (auto [i, j] : finished[static_cast<std::size_t>(t)])
      if (deficit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
        return false;
    return true;
  }

  void dfs(std::size_t t) {
    if (found || aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (t == patterns.size()) {
      // Deficits are all zero here by the closed_ok checks; keep the witness
      // only if the counts pass the separation test.
      VertexData cand(q, chosen);
      if (is_realizable_vertex_data(cand).realizable) found = std::move(cand);
      return;
    }
    Mask m = patterns[t];
    auto bits = mask_bits(m);
    if (bits.size() == 1) {
      int i = bits.front();
      std::int64_t v = deficit[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      if (v < 0) return;
      apply(m, v);
      if (closed_ok(static_cast<int>(t))) {
        if (v > 0) chosen[m] = static_cast<std::uint64_t>(v);
        dfs(t + 1);
        chosen.erase(m);
      }
      apply(m, -v);
      return;
    }
    std::int64_t ub = std::numeric_limits<std::int64_t>::max();
    for (std::size_t a = 0; a < bits.size(); ++a)
      for (std::size_t b = a; b < bits.size(); ++b)
        ub = std::min(ub, deficit[static_cast<std::size_t>(bits[a])]
                                 [static_cast<std::size_t>(bits[b])]);
    if (ub < 0) return;
    for (std::int64_t v = ub; v >= 0 && !found && !aborted; --v) {
      apply(m, v);
      if (closed_ok(static_cast<int>(t))) {
        if (v > 0) chosen[m] = static_cast<std::uint64_t>(v);
        dfs(t + 1);
        chosen.erase(m);
      }
      apply(m, -v);
    }
  }
};

}  // namespace detail

/// Exhaustive backtracking for a realizable VertexData c with
/// adjacency_from_vertex_data(c) = Q.  Patterns are assigned by descending
/// population count then ascending mask, counts high to low, so the witness
/// is deterministic.  A failed inequality scan short-circuits to
/// not_realizable; q beyond the limit or an exhausted node budget yields
/// undecided.
inline AdjacencyRealizability is_realizable_adjacency(
    const FacetAdjacencyMatrix& Q, const AdjacencySearchOptions& opts = {}) {
  AdjacencyRealizability out;
  if (Q.facet_count() > opts.max_facets) {
    out.verdict = SearchVerdict::undecided;
    return out;
  }
  if (!check_adjacency_inequalities(Q).passed()) {
    out.verdict = SearchVerdict::not_realizable;
    return out;
  }
  detail::AdjacencySearch search(Q, opts.node_budget);
  search.dfs(0);
  out.nodes = search.nodes;
  if (search.found) {
    out.verdict = SearchVerdict::realizable;
    out.witness = std::move(search.found);
  } else if (search.aborted) {
    out.verdict = SearchVerdict::undecided;
  } else {
    out.verdict = SearchVerdict::not_realizable;
  }
  return out;
}

}  // namespace purecomplex
