#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "lqshell/constructors.hpp"
#include "lqshell/linear_quotients.hpp"
#include "lqshell/polymatroid.hpp"
#include "lqshell/random_instances.hpp"

using namespace lqshell;

TEST_SUITE_BEGIN("linear_quotients");

TEST_CASE("order verification") {
  MonomialIdeal ideal = fatpoint_example();

  SUBCASE("the hand-checked order is valid with variable colons throughout") {
    OrderCertificate cert = verify_linear_quotients(ideal, fatpoint_example_order());
    CHECK(cert.valid);
    REQUIRE(cert.steps.size() == 5);
    for (const ColonStep& step : cert.steps)
      for (const Monomial& g : step.colon_generators) CHECK(g.degree() == 1);
    // The complement block sees x1 in every colon: its members are outside
    // the x1-part, so the x1-part contributes exactly (x1).
    for (size_t pos = 3; pos < cert.steps.size(); ++pos) {
      const auto& gens = cert.steps[pos].colon_generators;
      CHECK(std::find(gens.begin(), gens.end(), mono({1, 0, 0, 0})) != gens.end());
    }
  }

  SUBCASE("a bad order fails at position 2") {
    std::vector<Monomial> bad = {mono({0, 0, 2, 0}), mono({1, 1, 0, 1}),
                                 mono({2, 0, 0, 0}), mono({1, 0, 1, 0}),
                                 mono({0, 1, 1, 1}), mono({0, 2, 0, 2})};
    OrderCertificate cert = verify_linear_quotients(ideal, bad);
    CHECK_FALSE(cert.valid);
    CHECK(cert.failed_position == 2);
    // (x3^2) : x1x2x4 = (x3^2), degree 2.
    REQUIRE(cert.steps.back().colon_generators.size() == 1);
    CHECK(cert.steps.back().colon_generators[0] == mono({0, 0, 2, 0}));
  }

  CHECK(verify_linear_quotients(ideal_of(2, {{3, 1}}), {mono({3, 1})}).valid);
  CHECK(verify_linear_quotients(MonomialIdeal::zero(2), {}).valid);
  CHECK_THROWS_AS(verify_linear_quotients(ideal, {mono({2, 0, 0, 0})}),
                  std::invalid_argument);
}

TEST_CASE("splitting off a variable") {
  MonomialIdeal ideal = fatpoint_example();
  Split parts = split(ideal, 0);
  CHECK(parts.stripped_part ==
        ideal_of(4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(parts.complement ==
        ideal_of(4, {{0, 0, 2, 0}, {0, 1, 1, 1}, {0, 2, 0, 2}}));
  CHECK(parts.stripped_part.generators().size() +
            parts.complement.generators().size() ==
        ideal.generators().size());

  SUBCASE("the complement is contained in the stripped part") {
    for (const Monomial& v : parts.complement.generators())
      CHECK(parts.stripped_part.contains(v));
  }

  SUBCASE("both parts stay componentwise polymatroidal") {
    CHECK(is_componentwise_polymatroidal(
              scale(parts.stripped_part, mono({1, 0, 0, 0})))
              .holds);
    CHECK(is_componentwise_polymatroidal(
              restrict_to_support(parts.complement).ideal)
              .holds);
  }

  Split m = split(MonomialIdeal::maximal_ideal(2), 0);
  CHECK(m.stripped_part.is_unit());
  CHECK(m.complement == ideal_of(2, {{0, 1}}));

  CHECK_THROWS_AS(split(ideal_of(2, {{0, 2}}), 0), std::domain_error);
}

TEST_CASE("order synthesis") {
  SUBCASE("reproduces the hand-checked order on the running example") {
    GeneratorOrder result = synthesize_lq_order(fatpoint_example());
    CHECK(result.order == fatpoint_example_order());
    CHECK(result.certificate.valid);
  }

  SUBCASE("the first block collects exactly the generators of the split variable") {
    GeneratorOrder result = synthesize_lq_order(fatpoint_example());
    for (size_t i = 0; i < 3; ++i) CHECK(result.order[i][0] > 0);
    for (size_t i = 3; i < 6; ++i) CHECK(result.order[i][0] == 0);
  }

  CHECK(synthesize_lq_order(ideal_of(3, {{1, 2, 0}})).order ==
        std::vector<Monomial>{mono({1, 2, 0})});
  CHECK(synthesize_lq_order(MonomialIdeal::zero(3)).order.empty());

  SUBCASE("checked mode rejects non componentwise polymatroidal input") {
    CHECK_THROWS_AS(synthesize_lq_order(two_squares()), std::domain_error);
    GeneratorOrder unchecked = synthesize_lq_order(two_squares(), false);
    CHECK_FALSE(unchecked.certificate.valid);
  }

  SUBCASE("Borel instance synthesizes and verifies") {
    GeneratorOrder result = synthesize_lq_order(principal_borel(mono({0, 1, 1})));
    CHECK(result.certificate.valid);
    CHECK(search_lq_order(principal_borel(mono({0, 1, 1}))).status ==
          SearchStatus::found);
  }

  SUBCASE("validity is invariant under a common monomial factor") {
    InstanceSampler sampler(51);
    for (int trial = 0; trial < 30; ++trial) {
      MonomialIdeal ideal = sampler.cwp_ideal();
      if (ideal.generators().size() < 2) continue;
      Monomial w = sampler.random_monomial(ideal.nvars(),
                                           sampler.rng().between(0, 3));
      std::vector<Monomial> order = synthesize_order(ideal);
      // Also exercise a deliberately scrambled (usually invalid) order.
      std::vector<Monomial> scrambled = order;
      std::reverse(scrambled.begin(), scrambled.end());
      for (const std::vector<Monomial>& candidate : {order, scrambled}) {
        std::vector<Monomial> scaled_order;
        for (const Monomial& g : candidate) scaled_order.push_back(g * w);
        OrderCertificate plain = verify_linear_quotients(ideal, candidate);
        OrderCertificate scaled =
            verify_linear_quotients(scale(ideal, w), scaled_order);
        CHECK(plain.valid == scaled.valid);
        CHECK(plain.failed_position == scaled.failed_position);
      }
    }
  }

  SUBCASE("synthesis verifies across the constructor families") {
    InstanceSampler sampler(52);
    for (int trial = 0; trial < 60; ++trial) {
      MonomialIdeal ideal = sampler.cwp_ideal();
      GeneratorOrder result = synthesize_lq_order(ideal);
      CHECK(result.certificate.valid);
    }
  }
}

TEST_CASE("backtracking search") {
  CHECK(search_lq_order(fatpoint_example()).status == SearchStatus::found);

  SearchResult none = search_lq_order(two_squares());
  CHECK(none.status == SearchStatus::none_exists);

  SearchResult strapped = search_lq_order(fatpoint_example(), 1);
  CHECK(strapped.status == SearchStatus::budget_exhausted);

  SUBCASE("search handles more than 64 generators") {
    // m^4 in five variables has 70 generators, past the width of the
    // dead-set bitmask; the search must still work, just without caching.
    MonomialIdeal big = power(MonomialIdeal::maximal_ideal(5), 4);
    REQUIRE(big.generators().size() == 70);
    SearchResult result = search_lq_order(big);
    REQUIRE(result.status == SearchStatus::found);
    CHECK(verify_linear_quotients(big, result.order).valid);
  }

  SUBCASE("found orders verify, and synthesis success implies search success") {
    InstanceSampler sampler(53);
    for (int trial = 0; trial < 30; ++trial) {
      MonomialIdeal ideal = sampler.cwp_ideal();
      SearchResult result = search_lq_order(ideal);
      REQUIRE(result.status == SearchStatus::found);
      CHECK(verify_linear_quotients(ideal, result.order).valid);
    }
  }
}

TEST_CASE("componentwise linear quotients") {
  ComponentwiseLq example = has_componentwise_linear_quotients(fatpoint_example());
  CHECK(example.all_found());
  CHECK(example.per_degree.size() == 4);  // degrees 2..4 plus the spot check

  ComponentwiseLq squares = has_componentwise_linear_quotients(two_squares());
  CHECK_FALSE(squares.all_found());
  CHECK(squares.any_infeasible());
  CHECK(squares.per_degree.at(2) == SearchStatus::none_exists);
  CHECK(squares.per_degree.at(3) == SearchStatus::found);

  CHECK(has_componentwise_linear_quotients(ideal_of(2, {{3, 1}})).all_found());

  SUBCASE("a full linear-quotients order forces componentwise ones") {
    InstanceSampler sampler(54);
    for (int trial = 0; trial < 10; ++trial) {
      MonomialIdeal ideal = sampler.arbitrary_ideal();
      if (search_lq_order(ideal).status == SearchStatus::found)
        CHECK(has_componentwise_linear_quotients(ideal).all_found());
    }
  }
}

TEST_SUITE_END();
