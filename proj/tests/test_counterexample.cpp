#include <catch2/catch_amalgamated.hpp>

#include <purecomplex/canonical.hpp>
#include <purecomplex/counterexample.hpp>
#include <purecomplex/intersection_data.hpp>
#include <purecomplex/json_io.hpp>

using namespace purecomplex;

namespace {

IntMatrix make(std::vector<std::vector<long long>> rows) {
  IntMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows.front().size();
  for (auto& r : rows) m.data.emplace_back(r.begin(), r.end());
  return m;
}

// Reference pair for k = 3: cores with one vertex per odd-size (resp.
// even-size) subset of the 4 facets.  Column order is immaterial, so compare
// as vertex data.
const IntMatrix kCoreK = make({{1, 1, 1, 0, 1, 0, 0, 0},
                               {1, 1, 0, 1, 0, 1, 0, 0},
                               {1, 0, 1, 1, 0, 0, 1, 0},
                               {0, 1, 1, 1, 0, 0, 0, 1}});
const IntMatrix kCoreKprime = make({{1, 1, 1, 0, 0, 0, 1},
                                    {1, 0, 0, 1, 1, 0, 1},
                                    {0, 1, 0, 1, 0, 1, 1},
                                    {0, 0, 1, 0, 1, 1, 1}});

}  // namespace

TEST_CASE("k=3 cores carry one vertex per odd/even facet subset") {
  auto pair = generate_counterexample(3);
  CHECK(pair.k == 3);
  CHECK(pair.verified);

  auto expect_K = vertex_data_from_incidence(FacetIncidenceMatrix(kCoreK));
  auto expect_Kp = vertex_data_from_incidence(FacetIncidenceMatrix(kCoreKprime));
  CHECK(vertex_data_from_incidence(incidence_from_facets(pair.core_K)) ==
        expect_K);
  CHECK(vertex_data_from_incidence(incidence_from_facets(pair.core_Kprime)) ==
        expect_Kp);

  CHECK(pair.core_K.facet_count() == 4);
  CHECK(pair.core_K.vertex_count() == 8);
  CHECK(pair.core_Kprime.vertex_count() == 7);
}

TEST_CASE("k=3 padded pair is 8-pure on 24 vertices with a covering facet") {
  auto pair = generate_counterexample(3);
  CHECK(pair.K.facet_count() == 5);
  CHECK(pair.Kprime.facet_count() == 5);
  CHECK(pair.K.vertex_count() == 24);
  CHECK(pair.Kprime.vertex_count() == 24);
  CHECK(pair.K.purity() == 8);
  CHECK(pair.Kprime.purity() == 8);

  // The last facet covers every core vertex.
  const auto& covering = pair.K.facets().back();
  for (int v = 1; v <= 8; ++v)
    CHECK(std::find(covering.begin(), covering.end(), v) != covering.end());
}

TEST_CASE("k=3 padded intersection data agrees through degree 3 and splits at 4") {
  auto pair = generate_counterexample(3);
  auto dk = intersection_data(pair.K, 4);
  auto dkp = intersection_data(pair.Kprime, 4);
  for (const auto& [m, v] : dk.values())
    if (popcount(m) <= 3) CHECK(dkp.value(m) == v);

  Mask first_four = 0b1111;
  CHECK(dk.value(first_four) == 0);
  CHECK(dkp.value(first_four) == 1);
  CHECK(pair.agreement_degree == 3);
  CHECK(pair.disagreement_witness == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("counterexample pairs verify for a range of k") {
  for (int k : {3, 4, 5}) {
    auto pair = generate_counterexample(k);
    CHECK(pair.verified);
    CHECK(pair.k == k);
    CHECK(pair.K.facet_count() == k + 2);
    CHECK(pair.K.purity().has_value());
    CHECK(pair.K.purity() == pair.Kprime.purity());
    CHECK(is_clique_complex_by_theorem(pair.K).is_clique_complex);
    CHECK(is_clique_complex_by_theorem(pair.Kprime).is_clique_complex);

    auto dk = intersection_data(pair.K, k + 1);
    auto dkp = intersection_data(pair.Kprime, k + 1);
    for (const auto& [m, v] : dk.values())
      if (popcount(m) <= k) CHECK(dkp.value(m) == v);
    auto a = static_cast<std::int64_t>(dk.value(full_mask(k + 1)));
    auto b = static_cast<std::int64_t>(dkp.value(full_mask(k + 1)));
    CHECK(((a - b == 1) || (b - a == 1)));  // the values differ by exactly one

    // Not isomorphic, even allowing facet relabeling.
    CHECK(canonical_form(pair.K, FacetLabels::free) !=
          canonical_form(pair.Kprime, FacetLabels::free));
  }
}

TEST_CASE("counterexample rejects k outside the supported range") {
  CHECK_THROWS_AS(generate_counterexample(2), std::invalid_argument);
  CHECK_THROWS_AS(generate_counterexample(0), std::invalid_argument);
  CHECK_THROWS_AS(generate_counterexample(-1), std::invalid_argument);
  CounterexampleOptions opts;
  opts.max_k = 4;
  CHECK_THROWS_AS(generate_counterexample(5, opts), std::invalid_argument);
  CHECK_NOTHROW(generate_counterexample(4, opts));
}

TEST_CASE("counterexample JSON carries exactly k, K, Kprime, verified") {
  auto pair = generate_counterexample(3);
  auto j = to_json(pair);
  CHECK(j.size() == 4);
  CHECK(j.at("k") == 3);
  CHECK(j.at("verified") == true);
  CHECK(complex_from_json(j.at("K")) == pair.K);
  CHECK(complex_from_json(j.at("Kprime")) == pair.Kprime);
}
