#pragma once

#include "purecomplex/simplicial_complex.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

namespace detail {

inline void require_facet_index(const SimplicialComplex& k, int i) {
  if (i < 1 || i > k.facet_count())
    throw std::invalid_argument("facet index " + std::to_string(i) +
                                " out of range 1.." +
                                std::to_string(k.facet_count()));
}

}  // namespace detail

/// The union of the three pairwise intersections of facets i, j, k.  By
/// distributivity this equals the intersection of the three pairwise unions.
inline std::vector<int> pairwise_union_face(const SimplicialComplex& K, int i,
                                            int j, int k) {
  detail::require_facet_index(K, i);
  detail::require_facet_index(K, j);
  detail::require_facet_index(K, k);
  if (i == j || i == k || j == k)
    throw std::invalid_argument("facet indices must be distinct");
  const auto& fi = K.facets()[static_cast<std::size_t>(i - 1)];
  const auto& fj = K.facets()[static_cast<std::size_t>(j - 1)];
  const auto& fk = K.facets()[static_cast<std::size_t>(k - 1)];
  auto u = detail::set_union(detail::set_intersection(fi, fj),
                             detail::set_intersection(fi, fk));
  return detail::set_union(u, detail::set_intersection(fj, fk));
}

/// A is a face iff it is empty or contained in some facet.
inline bool is_face(const SimplicialComplex& K, const std::vector<int>& A) {
  if (A.empty()) return true;
  std::vector<int> a = A;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  for (const auto& f : K.facets())
    if (detail::is_subset(a, f)) return true;
  return false;
}

struct CliqueVerdict {
  bool is_clique_complex = true;
  std::array<int, 3> witness{0, 0, 0};  // violating facet triple, 1-based
};

/// Clique test via facet triples: the complex is a clique complex iff for
/// every triple the pairwise-intersection union is a face.  Fewer than three
/// facets pass vacuously.  The witness is the lexicographically first
/// violating triple.
inline CliqueVerdict is_clique_complex_by_theorem(const SimplicialComplex& K) {
  int q = K.facet_count();
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int k = j + 1; k <= q; ++k)
        if (!is_face(K, pairwise_union_face(K, i, j, k)))
          return {false, {i, j, k}};
  return {};
}

/// Maximal cliques of the 1-skeleton (edges = 2-subsets of facets), as sorted
/// vertex vectors in lexicographic order.  Pivoting Bron–Kerbosch over
/// ascending vertex labels.
inline std::vector<std::vector<int>> skeleton_maximal_cliques(
    const SimplicialComplex& K) {
  using Bits = boost::dynamic_bitset<>;
  std::vector<int> verts = K.vertices();
  std::size_t n = verts.size();
  std::vector<Bits> adj(n, Bits(n));
  for (const auto& f : K.facets())
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        auto ia = static_cast<std::size_t>(
            std::lower_bound(verts.begin(), verts.end(), f[a]) - verts.begin());
        auto ib = static_cast<std::size_t>(
            std::lower_bound(verts.begin(), verts.end(), f[b]) - verts.begin());
        adj[ia][ib] = true;
        adj[ib][ia] = true;
      }

  std::vector<std::vector<int>> out;
  std::vector<std::size_t> r;
  auto expand = [&](auto&& self, Bits p, Bits x) -> void {
    if (p.none() && x.none()) {
      std::vector<int> clique;
      clique.reserve(r.size());
      for (std::size_t i : r) clique.push_back(verts[i]);
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    // Pivot: the candidate-or-excluded vertex with most neighbors in p.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    Bits px = p | x;
    for (std::size_t u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      std::size_t deg = (p & adj[u]).count();
      if (!have || deg > best) {
        have = true;
        best = deg;
        pivot = u;
      }
    }
    Bits cand = p & ~adj[pivot];
    for (std::size_t v = cand.find_first(); v != Bits::npos;
         v = cand.find_next(v)) {
      r.push_back(v);
      self(self, p & adj[v], x & adj[v]);
      r.pop_back();
      p[v] = false;
      x[v] = true;
    }
  };
  Bits all(n);
  all.set();
  expand(expand, all, Bits(n));
  std::sort(out.begin(), out.end());
  return out;
}

/// Oracle form of the clique test: the facets must be exactly the maximal
/// cliques of the 1-skeleton.
inline bool is_clique_complex_by_skeleton(const SimplicialComplex& K) {
  std::vector<std::vector<int>> facets = K.facets();
  std::sort(facets.begin(), facets.end());
  return skeleton_maximal_cliques(K) == facets;
}

struct GeneralizedFaceResult {
  std::vector<int> vertices;
  bool face = false;
};

/// Union, over all (l-1)-subsets of the given l indices, of the intersection
/// of those facets.  For clique complexes this set is always a face.
inline GeneralizedFaceResult generalized_face(const SimplicialComplex& K,
                                              std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.size() < 3)
    throw std::invalid_argument("generalized_face needs at least 3 distinct indices");
  for (int i : indices) detail::require_facet_index(K, i);

  std::vector<int> result;
  for (std::size_t drop = 0; drop < indices.size(); ++drop) {
    std::vector<int> inter;
    bool started = false;
    for (std::size_t t = 0; t < indices.size(); ++t) {
      if (t == drop) continue;
      const auto& f = K.facets()[static_cast<std::size_t>(indices[t] - 1)];
      if (!started) {
        inter = f;
        started = true;
      } else {
        inter = detail::set_intersection(inter, f);
      }
    }
    result = detail::set_union(result, inter);
  }
  return {result, is_face(K, result)};
}

struct TriangleIntersection {
  bool found = false;
  std::array<int, 3> facets{0, 0, 0};  // 1-based, lexicographically first
};

/// Three facets have triangle intersection when each of the three one-sided
/// residuals (in two of the facets but not the third) is nonempty.
/// Complements are taken inside the complex's own vertex set.
inline TriangleIntersection has_triangle_intersection(const SimplicialComplex& K) {
  int q = K.facet_count();
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int k = j + 1; k <= q; ++k) {
        const auto& fi = K.facets()[static_cast<std::size_t>(i - 1)];
        const auto& fj = K.facets()[static_cast<std::size_t>(j - 1)];
        const auto& fk = K.facets()[static_cast<std::size_t>(k - 1)];
        if (detail::set_difference(detail::set_intersection(fj, fk), fi).empty())
          continue;
        if (detail::set_difference(detail::set_intersection(fi, fk), fj).empty())
          continue;
        if (detail::set_difference(detail::set_intersection(fi, fj), fk).empty())
          continue;
        return {true, {i, j, k}};
      }
  return {};
}

}  // namespace purecomplex
