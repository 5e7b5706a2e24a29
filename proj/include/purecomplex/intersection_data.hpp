#pragma once

#include "purecomplex/adjacency.hpp"
#include "purecomplex/bignum.hpp"
#include "purecomplex/bitmask.hpp"
#include "purecomplex/clique.hpp"
#include "purecomplex/incidence.hpp"
#include "purecomplex/simplicial_complex.hpp"
#include "purecomplex/vertex_data.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

/// Sizes of facet intersections |F_{i1} ∩ ... ∩ F_{ik}|, indexed by the facet
/// subset as a Mask, stored for every nonempty subset up to a declared
/// degree.  Values must be complete through that degree and monotone
/// (larger subsets intersect to no more).
class IntersectionData {
 public:
  IntersectionData(int facet_count, int max_degree,
                   std::map<Mask, std::uint64_t> values)
      : q_(facet_count), max_degree_(max_degree), values_(std::move(values)) {
    if (q_ < 1 || q_ > 63)
      throw std::invalid_argument("intersection data: facet count must be in 1..63");
    if (max_degree_ < 1 || max_degree_ > q_)
      throw std::invalid_argument("intersection data: degree must be in 1..facet count");
    for (const auto& [m, v] : values_) {
      if (m == 0 || m >= (Mask{1} << q_))
        throw std::invalid_argument("intersection data: subset out of range");
      if (popcount(m) > max_degree_)
        throw std::invalid_argument("intersection data: subset beyond declared degree");
    }
    // Completeness through the declared degree, checked degree by degree.
    if (q_ <= 24) {
      for (Mask m = 1; m < (Mask{1} << q_); ++m)
        if (popcount(m) <= max_degree_ && !values_.count(m))
          throw std::invalid_argument("intersection data: missing subset {" +
                                      subset_label(m) + "}");
    } else {
      // Too many subsets to scan; require the count to match instead.
      std::uint64_t expect = 0;
      for (int d = 1; d <= max_degree_; ++d)
        expect += static_cast<std::uint64_t>(binomial(q_, d));
      if (values_.size() != expect)
        throw std::invalid_argument("intersection data: incomplete");
    }
    for (const auto& [m, v] : values_) {
      if (popcount(m) < 2) continue;
      Mask rest = m;
      while (rest) {
        Mask bit = rest & (0 - rest);
        rest &= rest - 1;
        if (v > values_.at(m ^ bit))
          throw std::invalid_argument(
              "intersection data: not monotone at {" + subset_label(m) + "}");
      }
    }
  }

  int facet_count() const { return q_; }
  int max_degree() const { return max_degree_; }

  std::uint64_t value(Mask subset) const { return values_.at(subset); }

  const std::map<Mask, std::uint64_t>& values() const { return values_; }

  /// "1,3,4"-style ascending label for a facet subset.
  static std::string subset_label(Mask m) {
    std::string out;
    for (int b : mask_bits(m)) {
      if (!out.empty()) out += ',';
      out += std::to_string(b + 1);
    }
    return out;
  }

  bool operator==(const IntersectionData&) const = default;

 private:
  int q_;
  int max_degree_;
  std::map<Mask, std::uint64_t> values_;
};

/// Direct set-intersection computation for all subsets up to max_degree,
/// memoized along the subset lattice.
inline IntersectionData intersection_data(const SimplicialComplex& K,
                                          int max_degree) {
  int q = K.facet_count();
  if (max_degree < 1 || max_degree > q)
    throw std::invalid_argument("intersection data: degree must be in 1..facet count");
  if (q > 24)
    throw std::invalid_argument("intersection data: more than 24 facets unsupported");

  using Bits = boost::dynamic_bitset<>;
  std::vector<int> verts = K.vertices();
  std::size_t n = verts.size();
  std::vector<Bits> facet_bits;
  facet_bits.reserve(static_cast<std::size_t>(q));
  for (const auto& f : K.facets()) {
    Bits b(n);
    for (int v : f)
      b[static_cast<std::size_t>(
          std::lower_bound(verts.begin(), verts.end(), v) - verts.begin())] = true;
    facet_bits.push_back(std::move(b));
  }

  std::vector<Bits> memo(static_cast<std::size_t>(Mask{1} << q));
  std::map<Mask, std::uint64_t> values;
  for (Mask m = 1; m < (Mask{1} << q); ++m) {
    if (popcount(m) > max_degree) continue;
    Mask rest = m & (m - 1);
    int low = std::countr_zero(m);
    memo[m] = rest ? (memo[rest] & facet_bits[static_cast<std::size_t>(low)])
                   : facet_bits[static_cast<std::size_t>(low)];
    values[m] = memo[m].count();
  }
  return IntersectionData(q, max_degree, std::move(values));
}

/// Inclusion–exclusion down the subset lattice: c(a) alternates the sums of
/// all supersets of a's facet set.  Data must be complete to degree q.
/// Throws when any count comes out negative or the result fails the
/// separation test — then no complex has this intersection data.
inline VertexData vertex_data_from_full_intersection_data(
    const IntersectionData& D) {
  int q = D.facet_count();
  if (D.max_degree() != q)
    throw std::invalid_argument(
        "inclusion-exclusion needs intersection data complete to degree q");
  if (q > 16)
    throw std::invalid_argument(
        "inclusion-exclusion unsupported beyond 16 facets");

  Mask full = full_mask(q);
  std::map<Mask, std::uint64_t> counts;
  for (Mask m = 1; m <= full; ++m) {
    Mask rest = full & ~m;
    std::int64_t c = 0;
    Mask sub = rest;
    for (;;) {
      std::int64_t term = static_cast<std::int64_t>(D.value(m | sub));
      c += (popcount(sub) % 2) ? -term : term;
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    if (c < 0)
      throw std::invalid_argument(
          "inconsistent intersection data: negative count for facet set {" +
          IntersectionData::subset_label(m) + "}");
    if (c > 0) counts[m] = static_cast<std::uint64_t>(c);
  }
  VertexData vd(q, std::move(counts));
  auto r = is_realizable_vertex_data(vd);
  if (!r.realizable)
    throw std::invalid_argument(
        "inconsistent intersection data: facet " + std::to_string(r.i) +
        (q == 1 ? " is empty"
                : " would be contained in facet " + std::to_string(r.j)));
  return vd;
}

struct ReconstructionResult {
  SimplicialComplex complex;
  VertexData vertex_data;
  bool adjacency_matches = false;
  bool pure = false;
  bool clique = false;
  bool triangle_intersection_free = false;

  bool verified() const {
    return adjacency_matches && pure && clique && triangle_intersection_free;
  }
};

/// Rebuilds a complex from its facet-adjacency matrix under the assumption
/// that some pure, triangle-intersection-free clique complex produced it.
/// Unknown higher-degree intersection values are filled in, degree by degree,
/// as the minimum over the one-smaller subsets; inclusion–exclusion then
/// yields vertex data and a complex.  The result carries a self-verification
/// verdict: when the assumption fails the output may be wrong, and either an
/// inconsistency is thrown here or a check below comes back false.
inline ReconstructionResult reconstruct_from_adjacency(
    const FacetAdjacencyMatrix& Q) {
  int q = Q.facet_count();
  if (q > 16)
    throw std::invalid_argument("reconstruction unsupported beyond 16 facets");

  std::map<Mask, std::uint64_t> values;
  for (int i = 0; i < q; ++i)
    values[Mask{1} << i] = static_cast<std::uint64_t>(Q.at(i, i));
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      values[(Mask{1} << i) | (Mask{1} << j)] =
          static_cast<std::uint64_t>(Q.at(i, j));
  for (int size = 3; size <= q; ++size)
    for (Mask m = 1; m < (Mask{1} << q); ++m) {
      if (popcount(m) != size) continue;
      std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
      Mask rest = m;
      while (rest) {
        Mask bit = rest & (0 - rest);
        rest &= rest - 1;
        best = std::min(best, values.at(m ^ bit));
      }
      values[m] = best;
    }

  IntersectionData D(q, q, std::move(values));
  VertexData vd = vertex_data_from_full_intersection_data(D);
  SimplicialComplex K = facets_from_incidence(incidence_from_vertex_data(vd));

  ReconstructionResult out{K, vd};
  out.adjacency_matches = adjacency_from_vertex_data(vd) == Q;
  out.pure = K.is_pure();
  out.clique = is_clique_complex_by_theorem(K).is_clique_complex;
  out.triangle_intersection_free = !has_triangle_intersection(K).found;
  return out;
}

}  // namespace purecomplex
