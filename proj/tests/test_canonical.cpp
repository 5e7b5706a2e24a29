#include <catch2/catch_amalgamated.hpp>

#include <purecomplex/canonical.hpp>

using namespace purecomplex;
using Facets = std::vector<SimplicialComplex::Facet>;

TEST_CASE("fixed-label keys are invariant under vertex relabeling") {
  SimplicialComplex a(Facets{{1, 2, 3}, {1, 3, 4}});
  SimplicialComplex b(Facets{{5, 6, 7}, {5, 7, 8}});
  CHECK(canonical_form(a, FacetLabels::fixed) ==
        canonical_form(b, FacetLabels::fixed));

  // The key reads off the vertex data in fixed order.
  CHECK(canonical_form(a, FacetLabels::fixed) == "q=2|11:2|10:1|01:1");
}

TEST_CASE("facet relabeling changes fixed keys but not free keys") {
  // Same unlabeled complex, facets swapped: a path of two edges.
  SimplicialComplex path(Facets{{1, 2}, {2, 3}});
  SimplicialComplex swapped(Facets{{2, 3, 9}, {1, 2}});
  (void)swapped;

  SimplicialComplex lopsided(Facets{{1, 2, 3}, {3, 4}});
  SimplicialComplex lopsided_swapped(Facets{{1, 2}, {2, 3, 4}});
  CHECK(canonical_form(lopsided, FacetLabels::fixed) !=
        canonical_form(lopsided_swapped, FacetLabels::fixed));
  CHECK(canonical_form(lopsided, FacetLabels::free) ==
        canonical_form(lopsided_swapped, FacetLabels::free));

  // Symmetric complexes coincide in both modes.
  CHECK(canonical_form(path, FacetLabels::fixed) ==
        canonical_form(path.normalized(), FacetLabels::fixed));
}

TEST_CASE("genuinely different complexes keep different keys") {
  SimplicialComplex covered(
      Facets{{1, 2, 4, 5}, {1, 3, 6, 7}, {2, 3, 8, 9}, {1, 2, 3, 10}});
  SimplicialComplex shared(
      Facets{{1, 2, 5, 6}, {1, 3, 7, 8}, {1, 4, 9, 10}, {1, 2, 3, 4}});
  CHECK(canonical_form(covered, FacetLabels::fixed) !=
        canonical_form(shared, FacetLabels::fixed));
  CHECK(canonical_form(covered, FacetLabels::free) !=
        canonical_form(shared, FacetLabels::free));
}

TEST_CASE("free keys identify complexes that differ only by facet order") {
  // Three facets in all six orders: one free key.
  SimplicialComplex base(Facets{{1, 2}, {2, 3}, {3, 4, 5}});
  std::vector<Facets> orders = {
      {{1, 2}, {2, 3}, {3, 4, 5}},
      {{3, 4, 5}, {2, 3}, {1, 2}},
      {{2, 3}, {3, 4, 5}, {1, 2}},
  };
  std::string key = canonical_form(base, FacetLabels::free);
  for (const auto& fs : orders) {
    // Relabel vertices too, to confirm joint invariance.
    Facets shifted;
    for (const auto& f : fs) {
      SimplicialComplex::Facet g;
      for (int v : f) g.push_back(v + 10);
      shifted.push_back(g);
    }
    CHECK(canonical_form(SimplicialComplex(shifted), FacetLabels::free) == key);
  }
}

TEST_CASE("free mode refuses too many facets") {
  Facets fs;
  for (int i = 0; i < 9; ++i) fs.push_back({i * 2 + 1, i * 2 + 2});
  CHECK_THROWS_AS(canonical_form(SimplicialComplex(fs), FacetLabels::free),
                  std::invalid_argument);
  CHECK_NOTHROW(canonical_form(SimplicialComplex(fs), FacetLabels::fixed));

  CanonicalOptions wide;
  wide.max_free_facets = 9;
  CHECK_NOTHROW(canonical_form(SimplicialComplex(fs), FacetLabels::free, wide));
}
