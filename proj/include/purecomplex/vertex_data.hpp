#pragma once

#include "purecomplex/bitmask.hpp"
#include "purecomplex/incidence.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

/// Vertex counts per exact facet-membership pattern: count(a) is the number
/// of vertices lying in precisely the facets selected by pattern a.  Only
/// positive counts are stored.  The empty pattern is forbidden because every
/// vertex belongs to at least one facet, so the total count is the vertex
/// count n of any complex this data encodes.
class VertexData {
 public:
  VertexData(int arity, std::map<Mask, std::uint64_t> counts)
      : arity_(arity), counts_(std::move(counts)) {
    if (arity_ < 1 || arity_ > 63)
      throw std::invalid_argument("vertex data: arity must be in 1..63");
    for (auto it = counts_.begin(); it != counts_.end();) {
      if (it->second == 0) {
        it = counts_.erase(it);
        continue;
      }
      if (it->first == 0)
        throw std::invalid_argument(
            "vertex data: every vertex must belong to at least one facet");
      if (it->first >= (Mask{1} << arity_))
        throw std::invalid_argument("vertex data: pattern exceeds arity " +
                                    std::to_string(arity_));
      ++it;
    }
  }

  int arity() const { return arity_; }

  std::uint64_t count(Mask pattern) const {
    auto it = counts_.find(pattern);
    return it == counts_.end() ? 0 : it->second;
  }

  /// Total vertex count n.
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [m, c] : counts_) t += c;
    return t;
  }

  const std::map<Mask, std::uint64_t>& counts() const { return counts_; }

  bool operator==(const VertexData&) const = default;

 private:
  int arity_;
  std::map<Mask, std::uint64_t> counts_;
};

/// Witness of the separation test.  When not realizable, (i, j) is the first
/// ordered pair (1-based) such that no positive pattern contains facet i but
/// not facet j — i.e. facet i would be contained in facet j.
struct VertexDataRealizability {
  bool realizable = true;
  int i = 0;
  int j = 0;
};

/// For arity >= 2: realizable iff every ordered pair of facets is separated
/// by some vertex.  For arity 1 the condition is just a nonempty facet.
inline VertexDataRealizability is_realizable_vertex_data(const VertexData& c) {
  if (c.arity() == 1) {
    if (c.count(Mask{1}) > 0) return {};
    return {false, 1, 1};
  }
  for (int i = 0; i < c.arity(); ++i)
    for (int j = 0; j < c.arity(); ++j) {
      if (i == j) continue;
      bool separated = false;
      for (const auto& [m, cnt] : c.counts())
        if ((m >> i & 1) && !(m >> j & 1)) {
          separated = true;
          break;
        }
      if (!separated) return {false, i + 1, j + 1};
    }
  return {};
}

/// Tallies the columns of B by membership pattern (bit i-1 of the pattern is
/// row i's entry).
inline VertexData vertex_data_from_incidence(const FacetIncidenceMatrix& b) {
  if (b.facet_count() > 63)
    throw std::invalid_argument("vertex data: more than 63 facets");
  std::map<Mask, std::uint64_t> counts;
  for (int j = 0; j < b.vertex_count(); ++j) {
    Mask m = 0;
    for (int i = 0; i < b.facet_count(); ++i)
      if (b.rows()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        m |= Mask{1} << i;
    ++counts[m];
  }
  return VertexData(b.facet_count(), std::move(counts));
}

/// Emits count(a) identical columns per pattern a, patterns ordered as binary
/// words a1...aq descending.  Rejects vertex data that fails the separation
/// test.
inline FacetIncidenceMatrix incidence_from_vertex_data(const VertexData& c) {
  auto r = is_realizable_vertex_data(c);
  if (!r.realizable) {
    if (c.arity() == 1)
      throw std::invalid_argument("vertex data not realizable: facet 1 is empty");
    throw std::invalid_argument(
        "vertex data not realizable: facet " + std::to_string(r.i) +
        " would be contained in facet " + std::to_string(r.j));
  }
  std::vector<Mask> patterns;
  patterns.reserve(c.counts().size());
  for (const auto& [m, cnt] : c.counts()) patterns.push_back(m);
  std::sort(patterns.begin(), patterns.end(), [&](Mask a, Mask b) {
    return pattern_word(a, c.arity()) > pattern_word(b, c.arity());
  });

  IntMatrix out;
  out.rows = c.arity();
  out.cols = static_cast<int>(c.total());
  out.data.assign(static_cast<std::size_t>(out.rows),
                  std::vector<std::int64_t>(static_cast<std::size_t>(out.cols), 0));
  int col = 0;
  for (Mask m : patterns)
    for (std::uint64_t t = 0; t < c.count(m); ++t, ++col)
      for (int i = 0; i < c.arity(); ++i)
        if (m >> i & 1)
          out.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = 1;
  return FacetIncidenceMatrix(out);
}

}  // namespace purecomplex
