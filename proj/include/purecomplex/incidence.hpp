#pragma once

#include "purecomplex/simplicial_complex.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

/// Raw rectangular integer matrix, exactly as it appears in JSON I/O.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::int64_t>> data;

  bool operator==(const IntMatrix&) const = default;
};

namespace detail {

inline void require_rectangular(const IntMatrix& m, const char* what) {
  if (m.rows < 0 || m.cols < 0 ||
      static_cast<int>(m.data.size()) != m.rows)
    throw std::invalid_argument(std::string(what) + ": row count mismatch");
  for (const auto& row : m.data)
    if (static_cast<int>(row.size()) != m.cols)
      throw std::invalid_argument(std::string(what) + ": ragged rows");
}

}  // namespace detail

/// Verdict of the facet-incidence realizability test, with a witness on
/// failure.  Row indices are 1-based.
struct IncidenceRealizability {
  enum class Failure { none, zero_row, comparable_rows };

  bool realizable = true;
  Failure failure = Failure::none;
  int row = 0;        // the all-zero row, or the row contained in other_row
  int other_row = 0;  // set for comparable_rows
};

/// Decides whether a 0/1 matrix is the facet-incidence matrix of some
/// simplicial complex: every row must be nonzero and no row's support may be
/// contained in another's.  Throws on non-rectangular or non-binary input.
inline IncidenceRealizability is_realizable_incidence(const IntMatrix& m) {
  detail::require_rectangular(m, "incidence matrix");
  if (m.rows == 0) throw std::invalid_argument("incidence matrix: no rows");
  for (const auto& row : m.data)
    for (std::int64_t v : row)
      if (v != 0 && v != 1)
        throw std::invalid_argument("incidence matrix: entries must be 0 or 1");

  IncidenceRealizability out;
  for (int i = 0; i < m.rows; ++i) {
    bool nonzero = false;
    for (std::int64_t v : m.data[static_cast<std::size_t>(i)]) nonzero |= v != 0;
    if (!nonzero) {
      out.realizable = false;
      out.failure = IncidenceRealizability::Failure::zero_row;
      out.row = i + 1;
      return out;
    }
  }
  auto contained = [&](int i, int j) {  // support(i) subset of support(j)?
    for (int c = 0; c < m.cols; ++c)
      if (m.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] >
          m.data[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)])
        return false;
    return true;
  };
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.rows; ++j) {
      if (contained(i, j)) {
        out = {false, IncidenceRealizability::Failure::comparable_rows, i + 1,
               j + 1};
        return out;
      }
      if (contained(j, i)) {
        out = {false, IncidenceRealizability::Failure::comparable_rows, j + 1,
               i + 1};
        return out;
      }
    }
  return out;
}

/// Validated facet-incidence matrix: entry (i, j) = 1 iff facet i contains
/// vertex j.  Rows are facets, columns are vertices labeled by position.
class FacetIncidenceMatrix {
 public:
  explicit FacetIncidenceMatrix(const IntMatrix& raw) {
    auto r = is_realizable_incidence(raw);
    if (!r.realizable) {
      if (r.failure == IncidenceRealizability::Failure::zero_row)
        throw std::invalid_argument("incidence matrix: row " +
                                    std::to_string(r.row) + " has no 1s");
      throw std::invalid_argument("incidence matrix: row " +
                                  std::to_string(r.row) +
                                  " is contained in row " +
                                  std::to_string(r.other_row));
    }
    rows_.reserve(static_cast<std::size_t>(raw.rows));
    for (const auto& row : raw.data) {
      std::vector<std::uint8_t> r8(row.begin(), row.end());
      rows_.push_back(std::move(r8));
    }
    cols_ = raw.cols;
  }

  int facet_count() const { return static_cast<int>(rows_.size()); }
  int vertex_count() const { return cols_; }

  /// 1-based query: does facet i contain vertex j?
  bool contains(int facet, int vertex) const {
    return rows_.at(static_cast<std::size_t>(facet - 1))
               .at(static_cast<std::size_t>(vertex - 1)) != 0;
  }

  const std::vector<std::vector<std::uint8_t>>& rows() const { return rows_; }

  IntMatrix to_matrix() const {
    IntMatrix m;
    m.rows = facet_count();
    m.cols = cols_;
    for (const auto& row : rows_)
      m.data.emplace_back(row.begin(), row.end());
    return m;
  }

  bool operator==(const FacetIncidenceMatrix&) const = default;

 private:
  std::vector<std::vector<std::uint8_t>> rows_;
  int cols_ = 0;
};

/// Incidence matrix of the complex after vertex normalization; column j
/// corresponds to normalized vertex label j.
inline FacetIncidenceMatrix incidence_from_facets(const SimplicialComplex& k) {
  SimplicialComplex n = k.normalized();
  IntMatrix m;
  m.rows = n.facet_count();
  m.cols = n.vertex_count();
  m.data.assign(static_cast<std::size_t>(m.rows),
                std::vector<std::int64_t>(static_cast<std::size_t>(m.cols), 0));
  for (int i = 0; i < m.rows; ++i)
    for (int v : n.facets()[static_cast<std::size_t>(i)])
      m.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(v - 1)] = 1;
  return FacetIncidenceMatrix(m);
}

/// Reads facets off the rows; vertex labels are the column indices.
inline SimplicialComplex facets_from_incidence(const FacetIncidenceMatrix& b) {
  std::vector<SimplicialComplex::Facet> facets;
  facets.reserve(static_cast<std::size_t>(b.facet_count()));
  for (const auto& row : b.rows()) {
    SimplicialComplex::Facet f;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j]) f.push_back(static_cast<int>(j) + 1);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(facets));
}

inline SimplicialComplex facets_from_incidence(const IntMatrix& raw) {
  return facets_from_incidence(FacetIncidenceMatrix(raw));
}

}  // namespace purecomplex
