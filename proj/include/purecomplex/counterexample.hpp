#pragma once

#include "purecomplex/canonical.hpp"
#include "purecomplex/clique.hpp"
#include "purecomplex/incidence.hpp"
#include "purecomplex/intersection_data.hpp"
#include "purecomplex/simplicial_complex.hpp"
#include "purecomplex/vertex_data.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

/// Two pure clique complexes whose intersection data agree through degree k
/// yet differ on the facet set {1..k+1} — the obstruction to reconstructing
/// a complex from bounded-degree intersection data.
struct CounterexamplePair {
  int k = 0;
  SimplicialComplex K;            // padded pair, k+2 facets each
  SimplicialComplex Kprime;
  SimplicialComplex core_K;       // the stage before the covering facet and
  SimplicialComplex core_Kprime;  // purity padding are added (k+1 facets)
  int agreement_degree = 0;       // = k
  std::vector<int> disagreement_witness;  // facet indices 1..k+1
  bool verified = false;
};

struct CounterexampleOptions {
  int max_k = 10;  // verification walks all facet subsets of size <= k+1
};

namespace detail {

/// One vertex per facet subset of the given parity of the subset size.
inline VertexData parity_vertex_data(int q, int parity) {
  std::map<Mask, std::uint64_t> counts;
  for (Mask m = 1; m < (Mask{1} << q); ++m)
    if (popcount(m) % 2 == parity) counts[m] = 1;
  return VertexData(q, std::move(counts));
}

/// Appends the covering facet (every existing vertex plus fresh ones up to
/// size v), then pads each original facet with fresh private vertices to
/// reach size v.  Fresh labels increase facet-major.
inline SimplicialComplex pad_to_pure(const SimplicialComplex& core, int v) {
  std::vector<SimplicialComplex::Facet> fs = core.facets();
  std::vector<int> all = core.vertices();
  int next = all.empty() ? 1 : all.back() + 1;
  SimplicialComplex::Facet covering = all;
  while (static_cast<int>(covering.size()) < v) covering.push_back(next++);
  fs.push_back(std::move(covering));
  for (std::size_t i = 0; i + 1 < fs.size(); ++i)
    while (static_cast<int>(fs[i].size()) < v) fs[i].push_back(next++);
  return SimplicialComplex(std::move(fs));
}

}  // namespace detail

/// Builds the impossibility pair for a given k: vertex data with one vertex
/// per odd-size facet subset (K) versus per even-size subset (K'), padded to
/// a common purity with a covering facet.  All invariants of the pair are
/// checked before returning; agreement holds through degree k and the values
/// on {1..k+1} differ by exactly one.
inline CounterexamplePair generate_counterexample(
    int k, const CounterexampleOptions& opts = {}) {
  if (k < 3)
    throw std::invalid_argument("counterexample needs k >= 3");
  if (k > opts.max_k)
    throw std::invalid_argument("counterexample verification capped at k = " +
                                std::to_string(opts.max_k));

  int q0 = k + 1;
  SimplicialComplex core_K =
      facets_from_incidence(incidence_from_vertex_data(detail::parity_vertex_data(q0, 1)));
  SimplicialComplex core_Kp =
      facets_from_incidence(incidence_from_vertex_data(detail::parity_vertex_data(q0, 0)));

  int v = std::max(core_K.vertex_count(), core_Kp.vertex_count());  // 2^k
  SimplicialComplex K = detail::pad_to_pure(core_K, v);
  SimplicialComplex Kp = detail::pad_to_pure(core_Kp, v);

  CounterexamplePair pair{k, K, Kp, core_K, core_Kp, k, {}, false};
  for (int i = 1; i <= k + 1; ++i) pair.disagreement_witness.push_back(i);

  auto fail = [&](const std::string& why) {
    throw std::logic_error("counterexample construction failed verification: " + why);
  };
  if (K.purity() != std::optional<int>(v) || Kp.purity() != std::optional<int>(v))
    fail("purity");
  if (!is_clique_complex_by_theorem(K).is_clique_complex ||
      !is_clique_complex_by_theorem(Kp).is_clique_complex)
    fail("clique test");

  IntersectionData dk = intersection_data(K, k + 1);
  IntersectionData dkp = intersection_data(Kp, k + 1);
  for (const auto& [m, val] : dk.values())
    if (popcount(m) <= k && dkp.value(m) != val)
      fail("agreement through degree " + std::to_string(k));
  Mask witness = full_mask(k + 1);  // facets 1..k+1
  if (dk.value(witness) == dkp.value(witness)) fail("degree-(k+1) disagreement");

  if (k + 2 <= 8) {
    if (canonical_form(K, FacetLabels::free) == canonical_form(Kp, FacetLabels::free))
      fail("non-isomorphism");
  } else {
    // q! is too large to canonicalize; differing degree-(k+1) value multisets
    // already rule out any facet relabeling.
    std::vector<std::uint64_t> a, b;
    for (const auto& [m, val] : dk.values())
      if (popcount(m) == k + 1) a.push_back(val);
    for (const auto& [m, val] : dkp.values())
      if (popcount(m) == k + 1) b.push_back(val);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) fail("non-isomorphism (degree multiset)");
  }

  pair.verified = true;
  return pair;
}

}  // namespace purecomplex
