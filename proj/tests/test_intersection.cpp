#include <catch2/catch_amalgamated.hpp>

#include <purecomplex/adjacency.hpp>
#include <purecomplex/canonical.hpp>
#include <purecomplex/intersection_data.hpp>

#include <map>

using namespace purecomplex;
using Facets = std::vector<SimplicialComplex::Facet>;

namespace {

FacetAdjacencyMatrix adj(std::vector<std::vector<long long>> rows) {
  IntMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows.front().size();
  for (auto& r : rows) m.data.emplace_back(r.begin(), r.end());
  return FacetAdjacencyMatrix(m);
}

}  // namespace

TEST_CASE("intersection_data computes subset intersection sizes") {
  SimplicialComplex k(Facets{{1, 2, 3}, {1, 3, 4}});
  auto d = intersection_data(k, 2);
  CHECK(d.facet_count() == 2);
  CHECK(d.max_degree() == 2);
  CHECK(d.value(0b01) == 3);
  CHECK(d.value(0b10) == 3);
  CHECK(d.value(0b11) == 2);

  SimplicialComplex shared(
      Facets{{1, 2, 5, 6}, {1, 3, 7, 8}, {1, 4, 9, 10}, {1, 2, 3, 4}});
  auto d3 = intersection_data(shared, 4);
  CHECK(d3.value(0b0001) == 4);
  CHECK(d3.value(0b0011) == 1);
  CHECK(d3.value(0b1001) == 2);  // facets 1 and 4 share {1, 2}
  CHECK(d3.value(0b0111) == 1);
  CHECK(d3.value(0b1111) == 1);

  // Degree-2 data agrees with the adjacency matrix entrywise.
  auto q = adjacency_from_incidence(incidence_from_facets(shared));
  for (int i = 0; i < 4; ++i) {
    CHECK(d3.value(Mask{1} << i) == static_cast<std::uint64_t>(q.at(i, i)));
    for (int j = i + 1; j < 4; ++j)
      CHECK(d3.value((Mask{1} << i) | (Mask{1} << j)) ==
            static_cast<std::uint64_t>(q.at(i, j)));
  }

  auto disjoint = intersection_data(SimplicialComplex(Facets{{1, 2}, {3, 4}}), 2);
  CHECK(disjoint.value(0b11) == 0);
}

TEST_CASE("intersection_data validates its degree") {
  SimplicialComplex k(Facets{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(intersection_data(k, 0), std::invalid_argument);
  CHECK_THROWS_AS(intersection_data(k, 3), std::invalid_argument);
}

TEST_CASE("IntersectionData enforces completeness and monotonicity") {
  // Missing the pair subset.
  CHECK_THROWS_AS(IntersectionData(2, 2, {{0b01, 3}, {0b10, 3}}),
                  std::invalid_argument);
  // A pair exceeding one of its singletons.
  CHECK_THROWS_AS(IntersectionData(2, 2, {{0b01, 2}, {0b10, 3}, {0b11, 3}}),
                  std::invalid_argument);
  // Subset listed beyond the declared degree.
  CHECK_THROWS_AS(IntersectionData(3, 1, {{0b001, 1}, {0b010, 1}, {0b100, 1}, {0b011, 1}}),
                  std::invalid_argument);
  // Degree out of range.
  CHECK_THROWS_AS(IntersectionData(2, 3, {}), std::invalid_argument);
  CHECK_NOTHROW(IntersectionData(2, 2, {{0b01, 3}, {0b10, 3}, {0b11, 2}}));
}

TEST_CASE("subset labels list 1-based facet indices") {
  CHECK(IntersectionData::subset_label(0b1101) == "1,3,4");
  CHECK(IntersectionData::subset_label(0b1) == "1");
}

TEST_CASE("inclusion-exclusion recovers vertex data from full intersection data") {
  SimplicialComplex k(Facets{{1, 2, 3}, {1, 3, 4}});
  auto vd = vertex_data_from_full_intersection_data(intersection_data(k, 2));
  CHECK(vd.count(0b11) == 2);
  CHECK(vd.count(0b01) == 1);
  CHECK(vd.count(0b10) == 1);

  SimplicialComplex disjoint(Facets{{1, 2}, {3, 4}, {5, 6}});
  auto vd3 = vertex_data_from_full_intersection_data(intersection_data(disjoint, 3));
  CHECK(vd3.count(0b001) == 2);
  CHECK(vd3.count(0b010) == 2);
  CHECK(vd3.count(0b100) == 2);
  CHECK(vd3.total() == 6);
}

TEST_CASE("inconsistent intersection data is rejected") {
  // Monotone but impossible: facet 1 has 2 vertices, yet it shares 2 with
  // facet 2 and 2 with facet 3 while those triples only overlap once —
  // inclusion-exclusion drives c(100) to -1.
  std::map<Mask, std::uint64_t> vals{{0b001, 2}, {0b010, 2}, {0b100, 2},
                                     {0b011, 2}, {0b101, 2}, {0b110, 1},
                                     {0b111, 1}};
  IntersectionData bad(3, 3, vals);
  CHECK_THROWS_WITH(vertex_data_from_full_intersection_data(bad),
                    Catch::Matchers::ContainsSubstring("negative count"));

  // Degrees 1..2 only: inclusion-exclusion needs the full data.
  SimplicialComplex k(Facets{{1, 2}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(vertex_data_from_full_intersection_data(intersection_data(k, 2)),
                  std::invalid_argument);

  // s1 = s2 = s12: the facets would coincide.
  IntersectionData same(2, 2, {{0b01, 1}, {0b10, 1}, {0b11, 1}});
  CHECK_THROWS_WITH(vertex_data_from_full_intersection_data(same),
                    Catch::Matchers::ContainsSubstring("inconsistent"));
}

TEST_CASE("reconstruction from an adjacency matrix of a shared-apex complex") {
  SimplicialComplex shared(
      Facets{{1, 2, 5, 6}, {1, 3, 7, 8}, {1, 4, 9, 10}, {1, 2, 3, 4}});
  auto q = adjacency_from_incidence(incidence_from_facets(shared));
  auto r = reconstruct_from_adjacency(q);
  CHECK(r.verified());
  CHECK(r.adjacency_matches);
  CHECK(r.pure);
  CHECK(r.clique);
  CHECK(r.triangle_intersection_free);
  CHECK(canonical_form(r.complex, FacetLabels::fixed) ==
        canonical_form(shared, FacetLabels::fixed));
}

TEST_CASE("reconstruction of small matrices") {
  auto r = reconstruct_from_adjacency(adj({{3, 2}, {2, 3}}));
  CHECK(r.verified());
  CHECK(r.complex == SimplicialComplex(Facets{{1, 2, 3}, {1, 2, 4}}));
  CHECK(r.vertex_data.count(0b11) == 2);

  auto single = reconstruct_from_adjacency(adj({{4}}));
  CHECK(single.verified());
  CHECK(single.complex == SimplicialComplex(Facets{{1, 2, 3, 4}}));
}

TEST_CASE("reconstruction self-verification fails hard or soft on bad input") {
  // Impossible: min-rule then inclusion-exclusion goes negative.
  CHECK_THROWS_WITH(reconstruct_from_adjacency(adj({{2, 2, 2}, {2, 2, 1}, {2, 1, 2}})),
                    Catch::Matchers::ContainsSubstring("inconsistent"));

  // Passes every necessary inequality yet no complex realizes it; the
  // min-rule guess collapses under inclusion-exclusion.
  CHECK_THROWS_WITH(
      reconstruct_from_adjacency(
          adj({{3, 0, 2, 2}, {0, 3, 2, 2}, {2, 2, 4, 1}, {2, 2, 1, 4}})),
      Catch::Matchers::ContainsSubstring("inconsistent"));

  // Not pure: reconstruction still returns, but flags the mismatch.
  SimplicialComplex mixed(Facets{{1, 2, 3}, {3, 4}});
  auto q = adjacency_from_incidence(incidence_from_facets(mixed));
  auto r = reconstruct_from_adjacency(q);
  CHECK_FALSE(r.pure);
  CHECK_FALSE(r.verified());
}

TEST_CASE("a matrix with two preimages reconstructs to the unique one without "
          "triangle intersections") {
  // Both complexes have the same adjacency matrix; only the second is
  // triangle-intersection-free, and that is the one reconstruction returns.
  SimplicialComplex covered(
      Facets{{1, 2, 4, 5}, {1, 3, 6, 7}, {2, 3, 8, 9}, {1, 2, 3, 10}});
  SimplicialComplex shared(
      Facets{{1, 2, 5, 6}, {1, 3, 7, 8}, {1, 4, 9, 10}, {1, 2, 3, 4}});
  auto qc = adjacency_from_incidence(incidence_from_facets(covered));
  auto qs = adjacency_from_incidence(incidence_from_facets(shared));
  CHECK(qc == qs);
  CHECK(has_triangle_intersection(covered).found);
  CHECK_FALSE(has_triangle_intersection(shared).found);

  auto r = reconstruct_from_adjacency(qc);
  CHECK(r.verified());
  CHECK(canonical_form(r.complex, FacetLabels::fixed) ==
        canonical_form(shared, FacetLabels::fixed));
  CHECK(canonical_form(r.complex, FacetLabels::fixed) !=
        canonical_form(covered, FacetLabels::fixed));
}

TEST_CASE("reconstruction caps the facet count") {
  IntMatrix big;
  big.rows = big.cols = 17;
  big.data.assign(17, std::vector<std::int64_t>(17, 0));
  for (int i = 0; i < 17; ++i) big.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  CHECK_THROWS_AS(reconstruct_from_adjacency(FacetAdjacencyMatrix(big)),
                  std::invalid_argument);
}
