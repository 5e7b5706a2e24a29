#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

namespace detail {

// Helpers on sorted int vectors (facets and vertex sets).

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<int> set_intersection(const std::vector<int>& a,
                                         const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::vector<int> set_union(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline std::vector<int> set_difference(const std::vector<int>& a,
                                       const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace detail

/// A simplicial complex presented by its facet list.  Facets are kept as
/// sorted vectors of positive vertex labels; the vertex set is the union of
/// the facets.  Construction rejects empty facets, repeated vertices, and any
/// facet contained in another, so every instance is a genuine antichain.
///
/// Facet indices in arguments and witnesses throughout the library are
/// 1-based, matching the row indices of the incidence matrix.
class SimplicialComplex {
 public:
  using Facet = std::vector<int>;

  explicit SimplicialComplex(std::vector<Facet> facets)
      : facets_(std::move(facets)) {
    if (facets_.empty())
      throw std::invalid_argument("complex needs at least one facet");
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      auto& f = facets_[i];
      if (f.empty())
        throw std::invalid_argument("facet " + std::to_string(i + 1) +
                                    " is empty");
      std::sort(f.begin(), f.end());
      if (f.front() < 1)
        throw std::invalid_argument("facet " + std::to_string(i + 1) +
                                    ": vertex labels must be positive");
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw std::invalid_argument("facet " + std::to_string(i + 1) +
                                    " has a repeated vertex");
    }
    for (std::size_t i = 0; i < facets_.size(); ++i)
      for (std::size_t j = 0; j < facets_.size(); ++j)
        if (i != j && detail::is_subset(facets_[i], facets_[j]))
          throw std::invalid_argument(
              "facet " + std::to_string(i + 1) + " is contained in facet " +
              std::to_string(j + 1));
  }

  int facet_count() const { return static_cast<int>(facets_.size()); }

  const std::vector<Facet>& facets() const { return facets_; }

  /// Sorted union of the facets.
  std::vector<int> vertices() const {
    std::vector<int> out;
    for (const auto& f : facets_) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  int vertex_count() const { return static_cast<int>(vertices().size()); }

  /// Common facet size when the complex is pure, otherwise nullopt.
  std::optional<int> purity() const {
    std::size_t p = facets_.front().size();
    for (const auto& f : facets_)
      if (f.size() != p) return std::nullopt;
    return static_cast<int>(p);
  }

  bool is_pure() const { return purity().has_value(); }

  /// Relabels vertices 1..n in order of first appearance, scanning facets in
  /// order and each facet ascending.  Facet order is unchanged.
  SimplicialComplex normalized() const {
    std::map<int, int> relabel;
    int next = 1;
    for (const auto& f : facets_)
      for (int v : f)
        if (relabel.emplace(v, next).second) ++next;
    std::vector<Facet> out;
    out.reserve(facets_.size());
    for (const auto& f : facets_) {
      Facet g;
      g.reserve(f.size());
      for (int v : f) g.push_back(relabel.at(v));
      std::sort(g.begin(), g.end());
      out.push_back(std::move(g));
    }
    return SimplicialComplex(std::move(out));
  }

  bool operator==(const SimplicialComplex& o) const = default;

 private:
  std::vector<Facet> facets_;
};

}  // namespace purecomplex
