#pragma once

#include "purecomplex/adjacency.hpp"
#include "purecomplex/bitmask.hpp"
#include "purecomplex/counterexample.hpp"
#include "purecomplex/incidence.hpp"
#include "purecomplex/intersection_data.hpp"
#include "purecomplex/simplicial_complex.hpp"
#include "purecomplex/vertex_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

// JSON shapes:
//   complex            {"facets": [[1,2,3],[1,3,4]]}
//   matrix             {"rows": 2, "cols": 4, "data": [[...],[...]]}
//   vertex data        {"q": 2, "counts": {"10": 1, "01": 1, "11": 2}}
//   intersection data  {"q": 4, "values": {"1": 4, "1,2": 1, ...}}
//   counterexample     {"k": 3, "K": {...}, "Kprime": {...}, "verified": true}
// Pattern keys read most-significant-bit first: digit 1 of "10" is facet 1.

inline nlohmann::json to_json(const SimplicialComplex& k) {
  return nlohmann::json{{"facets", k.facets()}};
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("facets"))
    throw std::invalid_argument("complex JSON: expected {\"facets\": [[...]]}");
  const auto& fj = j.at("facets");
  if (!fj.is_array())
    throw std::invalid_argument("complex JSON: \"facets\" must be an array");
  std::vector<SimplicialComplex::Facet> facets;
  for (const auto& f : fj) {
    if (!f.is_array())
      throw std::invalid_argument("complex JSON: each facet must be an array");
    SimplicialComplex::Facet out;
    for (const auto& v : f) {
      if (!v.is_number_integer())
        throw std::invalid_argument("complex JSON: vertices must be integers");
      out.push_back(v.get<int>());
    }
    facets.push_back(std::move(out));
  }
  return SimplicialComplex(std::move(facets));
}

inline nlohmann::json to_json(const IntMatrix& m) {
  return nlohmann::json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw std::invalid_argument(
        "matrix JSON: expected {\"rows\", \"cols\", \"data\"}");
  IntMatrix m;
  if (!j.at("rows").is_number_integer() || !j.at("cols").is_number_integer())
    throw std::invalid_argument("matrix JSON: rows/cols must be integers");
  m.rows = j.at("rows").get<int>();
  m.cols = j.at("cols").get<int>();
  const auto& data = j.at("data");
  if (!data.is_array())
    throw std::invalid_argument("matrix JSON: data must be an array of rows");
  for (const auto& row : data) {
    if (!row.is_array())
      throw std::invalid_argument("matrix JSON: each row must be an array");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw std::invalid_argument("matrix JSON: entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    m.data.push_back(std::move(r));
  }
  detail::require_rectangular(m, "matrix JSON");
  return m;
}

inline nlohmann::json to_json(const FacetIncidenceMatrix& b) {
  return to_json(b.to_matrix());
}

inline nlohmann::json to_json(const FacetAdjacencyMatrix& q) {
  return to_json(q.to_matrix());
}

inline nlohmann::json to_json(const VertexData& c) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [m, cnt] : c.counts())
    counts[pattern_string(m, c.arity())] = cnt;
  return nlohmann::json{{"q", c.arity()}, {"counts", counts}};
}

inline VertexData vertex_data_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("counts"))
    throw std::invalid_argument(
        "vertex data JSON: expected {\"q\", \"counts\"}");
  if (!j.at("q").is_number_integer())
    throw std::invalid_argument("vertex data JSON: q must be an integer");
  int q = j.at("q").get<int>();
  if (q < 1 || q > 63)
    throw std::invalid_argument("vertex data JSON: q must be in 1..63");
  const auto& counts = j.at("counts");
  if (!counts.is_object())
    throw std::invalid_argument("vertex data JSON: counts must be an object");
  std::map<Mask, std::uint64_t> out;
  for (const auto& [key, val] : counts.items()) {
    if (!val.is_number_integer() || val.get<std::int64_t>() < 0)
      throw std::invalid_argument(
          "vertex data JSON: counts must be nonnegative integers");
    Mask m = pattern_from_string(key, q);
    if (out.count(m))
      throw std::invalid_argument("vertex data JSON: duplicate pattern " + key);
    out[m] = val.get<std::uint64_t>();
  }
  return VertexData(q, std::move(out));
}

inline nlohmann::json to_json(const IntersectionData& d) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [m, v] : d.values())
    values[IntersectionData::subset_label(m)] = v;
  return nlohmann::json{{"q", d.facet_count()}, {"values", values}};
}

inline IntersectionData intersection_data_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("values"))
    throw std::invalid_argument(
        "intersection data JSON: expected {\"q\", \"values\"}");
  if (!j.at("q").is_number_integer())
    throw std::invalid_argument("intersection data JSON: q must be an integer");
  int q = j.at("q").get<int>();
  if (q < 1 || q > 63)
    throw std::invalid_argument("intersection data JSON: q must be in 1..63");
  const auto& values = j.at("values");
  if (!values.is_object())
    throw std::invalid_argument("intersection data JSON: values must be an object");
  std::map<Mask, std::uint64_t> out;
  int max_degree = 1;
  for (const auto& [key, val] : values.items()) {
    if (!val.is_number_integer() || val.get<std::int64_t>() < 0)
      throw std::invalid_argument(
          "intersection data JSON: values must be nonnegative integers");
    Mask m = 0;
    int prev = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
      std::size_t next = key.find(',', pos);
      if (next == std::string::npos) next = key.size();
      int idx = 0;
      try {
        idx = std::stoi(key.substr(pos, next - pos));
      } catch (const std::exception&) {
        throw std::invalid_argument("intersection data JSON: bad subset key \"" +
                                    key + "\"");
      }
      if (idx <= prev || idx > q)
        throw std::invalid_argument(
            "intersection data JSON: subset key \"" + key +
            "\" must list ascending indices in 1.." + std::to_string(q));
      m |= Mask{1} << (idx - 1);
      prev = idx;
      pos = next + 1;
    }
    if (m == 0)
      throw std::invalid_argument("intersection data JSON: empty subset key");
    if (out.count(m))
      throw std::invalid_argument("intersection data JSON: duplicate subset \"" +
                                  key + "\"");
    out[m] = val.get<std::uint64_t>();
    max_degree = std::max(max_degree, popcount(m));
  }
  return IntersectionData(q, max_degree, std::move(out));
}

inline nlohmann::json to_json(const CounterexamplePair& pair) {
  return nlohmann::json{{"k", pair.k},
                        {"K", to_json(pair.K)},
                        {"Kprime", to_json(pair.Kprime)},
                        {"verified", pair.verified}};
}

}  // namespace purecomplex
