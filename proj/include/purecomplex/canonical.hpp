#pragma once

#include "purecomplex/bitmask.hpp"
#include "purecomplex/incidence.hpp"
#include "purecomplex/simplicial_complex.hpp"
#include "purecomplex/vertex_data.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace purecomplex {

enum class FacetLabels { fixed, free };

struct CanonicalOptions {
  int max_free_facets = 8;  // free mode tries all q! facet permutations
};

namespace detail {

/// Serializes vertex data with facet i renamed to position perm[i]... the
/// key lists patterns as binary words in descending word order, so it is
/// invariant under vertex relabeling by construction.
inline std::string serialize_vertex_data(const VertexData& c,
                                         const std::vector<int>& perm) {
  int q = c.arity();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;  // word, count
  rows.reserve(c.counts().size());
  for (const auto& [m, cnt] : c.counts()) {
    Mask remapped = 0;
    for (int j = 0; j < q; ++j)
      if (m >> perm[static_cast<std::size_t>(j)] & 1) remapped |= Mask{1} << j;
    rows.emplace_back(pattern_word(remapped, q), cnt);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string out = "q=" + std::to_string(q);
  for (const auto& [w, cnt] : rows) {
    Mask m = 0;  // rebuild the mask from the word for printing
    for (int j = 0; j < q; ++j)
      if (w >> (q - 1 - j) & 1) m |= Mask{1} << j;
    out += "|" + pattern_string(m, q) + ":" + std::to_string(cnt);
  }
  return out;
}

}  // namespace detail

/// Complete isomorphism key.  Fixed mode: the vertex data itself, serialized
/// — invariant under vertex relabeling only.  Free mode: the lexicographic
/// minimum of that serialization over all facet permutations, so complexes
/// agreeing up to both vertex and facet relabeling collide.
inline std::string canonical_form(const SimplicialComplex& K,
                                  FacetLabels labels,
                                  const CanonicalOptions& opts = {}) {
  VertexData c = vertex_data_from_incidence(incidence_from_facets(K));
  int q = c.arity();
  std::vector<int> perm(static_cast<std::size_t>(q));
  std::iota(perm.begin(), perm.end(), 0);
  if (labels == FacetLabels::fixed) return detail::serialize_vertex_data(c, perm);

  if (q > opts.max_free_facets)
    throw std::invalid_argument("free-mode canonical form limited to " +
                                std::to_string(opts.max_free_facets) +
                                " facets (q! permutations)");
  std::string best;
  do {
    std::string s = detail::serialize_vertex_data(c, perm);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace purecomplex
