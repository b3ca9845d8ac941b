#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "lqshell/constructors.hpp"
#include "lqshell/polymatroid.hpp"
#include "lqshell/random_instances.hpp"

using namespace lqshell;

namespace {

// Oracle for the Borel order: positionwise comparison of the literal sorted
// index multisets.
bool borel_leq_by_multisets(const Monomial& v, const Monomial& u) {
  auto indices = [](const Monomial& m) {
    std::vector<int> idx;
    for (int i = 0; i < m.nvars(); ++i)
      for (Exp k = 0; k < m[i]; ++k) idx.push_back(i);
    return idx;
  };
  std::vector<int> a = indices(v), b = indices(u);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("constructors");

TEST_CASE("Veronese type") {
  CHECK(veronese_type({1, 1, 1}, 2) ==
        ideal_of(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  for (int d = 1; d <= 4; ++d)
    CHECK(veronese_type({d, d, d}, d) ==
          power(MonomialIdeal::maximal_ideal(3), d));
  CHECK(veronese_type({1, 0}, 2).is_zero());
}

TEST_CASE("Borel order") {
  CHECK(borel_leq(mono({1, 1, 0}), mono({0, 1, 1})));       // x1x2 below x2x3
  CHECK_FALSE(borel_leq(mono({0, 0, 2}), mono({0, 1, 1})));  // x3^2 not below x2x3
  CHECK(borel_leq(mono({0, 1, 1}), mono({0, 1, 1})));
  CHECK_THROWS_AS(borel_leq(mono({1, 0, 0}), mono({0, 1, 1})),
                  std::invalid_argument);

  SUBCASE("prefix-sum route matches the index-multiset definition") {
    InstanceSampler sampler(41);
    for (int trial = 0; trial < 300; ++trial) {
      int n = sampler.rng().between(2, 5);
      int d = sampler.rng().between(1, 5);
      Monomial v = sampler.random_monomial(n, d);
      Monomial u = sampler.random_monomial(n, d);
      CHECK(borel_leq(v, u) == borel_leq_by_multisets(v, u));
    }
  }
}

TEST_CASE("principal Borel ideals") {
  CHECK(principal_borel(mono({0, 1, 1})) ==
        ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}}));
  for (int d = 1; d <= 4; ++d) {
    CHECK(principal_borel(mono({d, 0, 0})) == ideal_of(3, {{d, 0, 0}}));
    CHECK(principal_borel(mono({0, 0, d})) ==
          power(MonomialIdeal::maximal_ideal(3), d));
  }
  CHECK_THROWS_AS(principal_borel(Monomial::one(3)), std::invalid_argument);

  SUBCASE("containment of Borel ideals is the Borel order on generators") {
    InstanceSampler sampler(42);
    for (int trial = 0; trial < 100; ++trial) {
      int n = sampler.rng().between(2, 4);
      int d = sampler.rng().between(1, 4);
      Monomial v = sampler.random_monomial(n, d);
      Monomial u = sampler.random_monomial(n, d);
      MonomialIdeal bu = principal_borel(u), bv = principal_borel(v);
      bool contained = true;
      for (const Monomial& g : bv.generators())
        if (!bu.contains(g)) {
          contained = false;
          break;
        }
      CHECK(contained == borel_leq(v, u));
    }
  }

  SUBCASE("multiplying by the maximal ideal shifts the Borel generator") {
    InstanceSampler sampler(43);
    for (int trial = 0; trial < 60; ++trial) {
      int n = sampler.rng().between(2, 4);
      int d = sampler.rng().between(1, 3);
      Monomial u = sampler.random_monomial(n, d);
      for (int shift = 1; shift <= 2; ++shift) {
        Monomial raised = u;
        for (int s = 0; s < shift; ++s)
          raised = raised * Monomial::variable(n, n - 1);
        CHECK(product(power(MonomialIdeal::maximal_ideal(n), shift),
                      principal_borel(u)) == principal_borel(raised));
      }
    }
  }
}

TEST_CASE("componentwise principal Borel recognition") {
  CHECK(is_componentwise_principal_borel(principal_borel(mono({0, 1, 1}))));
  CHECK(is_componentwise_principal_borel(principal_borel(mono({0, 0, 0, 2}))));

  // B(x2*x3) + B(x1*x3^2) collapses to B(x2*x3): every degree-3 generator of
  // the second summand is already a multiple of a degree-2 one.
  MonomialIdeal summed =
      sum(principal_borel(mono({0, 1, 1})), principal_borel(mono({1, 0, 2})));
  CHECK(summed == principal_borel(mono({0, 1, 1})));
  CHECK(is_componentwise_principal_borel(summed));

  // The degree-1 component of (x2) is not B(x2) = (x1, x2).
  CHECK_FALSE(is_componentwise_principal_borel(ideal_of(2, {{0, 1}})));

  // The triangle x1x2, x1x3, x2x3 is polymatroidal but has no Borel shape:
  // its Borel-maximal generator x2x3 would drag in x1^2.
  CHECK_FALSE(is_componentwise_principal_borel(veronese_type({1, 1, 1}, 2)));

  // Multi-degree positive case: (x1, x2^2) has components B(x1) and B(x2^2).
  CHECK(is_componentwise_principal_borel(ideal_of(2, {{1, 0}, {0, 2}})));
}

TEST_CASE("fat point intersections") {
  FatPointIdeal fat = fat_point_ideal(4, {{0, 1, 2}, {0, 2, 3}}, {2, 2});
  CHECK(fat.ideal == fatpoint_example());
  CHECK(fat.covering);

  FatPointIdeal whole = fat_point_ideal(3, {{0, 1, 2}}, {2});
  CHECK(whole.ideal == power(MonomialIdeal::maximal_ideal(3), 2));
  CHECK(whole.covering);

  FatPointIdeal bad = fat_point_ideal(3, {{0}, {1}}, {1, 1});
  CHECK_FALSE(bad.covering);
  CHECK(bad.bad_pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(bad.ideal == ideal_of(3, {{1, 1, 0}}));

  CHECK_THROWS_AS(fat_point_ideal(3, {{}}, {1}), std::invalid_argument);

  // Variable sets are sets: repeated indices collapse.
  CHECK(variable_power_ideal(3, {0, 0, 2}, 2) ==
        variable_power_ideal(3, {0, 2}, 2));
}

TEST_CASE("layered sums") {
  MonomialIdeal j1 = ideal_of(3, {{1, 0, 0}, {0, 0, 1}});
  MonomialIdeal j2 = power(MonomialIdeal::maximal_ideal(3), 2);
  CHECK(layered_sum({j1, j2}) == ideal_of(3, {{1, 0, 0}, {0, 0, 1}, {0, 2, 0}}));
  CHECK(layered_sum({j1}) == j1);
  CHECK_THROWS_AS(layered_sum({ideal_of(2, {{1, 0}}), ideal_of(2, {{0, 2}})}),
                  std::domain_error);
  CHECK_THROWS_AS(layered_sum({j2, j1}), std::domain_error);

  SUBCASE("components follow the three-case layer formula") {
    InstanceSampler sampler(44);
    for (int trial = 0; trial < 20; ++trial) {
      // A Veronese tower: widening the bound by each degree gap keeps every
      // m^gap-multiple of a layer inside the next.
      int n = sampler.rng().between(2, 4);
      int d = sampler.rng().between(1, 2);
      std::vector<Exp> bound(static_cast<size_t>(n));
      for (Exp& b : bound) b = static_cast<Exp>(sampler.rng().between(0, d));
      bound[static_cast<size_t>(sampler.rng().below(n))] += static_cast<Exp>(d);
      std::vector<MonomialIdeal> layers{veronese_type(bound, d)};
      std::vector<int> degrees{d};
      for (int step = 0; step < 2; ++step) {
        int gap = sampler.rng().between(1, 2);
        d += gap;
        for (Exp& b : bound) b = static_cast<Exp>(std::min<int>(b + gap, d));
        layers.push_back(veronese_type(bound, d));
        degrees.push_back(d);
      }
      MonomialIdeal combined = layered_sum(layers);
      MonomialIdeal m = MonomialIdeal::maximal_ideal(n);
      for (int j = degrees.front(); j <= degrees.back() + 2; ++j) {
        size_t i = 0;
        while (i + 1 < degrees.size() && degrees[i + 1] <= j) ++i;
        MonomialIdeal expected = layers[i];
        for (int s = degrees[i]; s < j; ++s) expected = product(m, expected);
        CHECK(component(combined, j) == expected);
      }
    }
  }
}

TEST_CASE("socle") {
  for (int d = 1; d <= 4; ++d) {
    MonomialIdeal md = power(MonomialIdeal::maximal_ideal(2), d);
    MonomialIdeal expected =
        d == 1 ? MonomialIdeal::unit(2)
               : power(MonomialIdeal::maximal_ideal(2), d - 1);
    CHECK(socle(md) == expected);
  }

  // The square of (x1, x2) viewed inside K[x1,x2,x3] has empty socle: no
  // monomial times x3 lands in the ideal at the right degree.
  MonomialIdeal wrong_ambient = ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
  CHECK(socle(wrong_ambient).is_zero());

  CHECK_THROWS_AS(socle(fatpoint_example()), std::invalid_argument);
  CHECK_THROWS_AS(socle(MonomialIdeal::unit(2)), std::invalid_argument);
  CHECK_THROWS_AS(variable_power_ideal(3, {0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(variable_power_ideal(3, {7}, 1), std::invalid_argument);

  SUBCASE("socle identities on polymatroidal input") {
    InstanceSampler sampler(45);
    for (int trial = 0; trial < 40; ++trial) {
      MonomialIdeal ideal = sampler.polymatroidal();
      if (ideal.is_zero() || ideal.is_unit()) continue;
      MonomialIdeal soc = socle(ideal);
      // m * soc(I) is inside I.
      if (!soc.is_zero()) {
        MonomialIdeal shifted =
            product(MonomialIdeal::maximal_ideal(ideal.nvars()), soc);
        for (const Monomial& g : shifted.generators())
          CHECK(ideal.contains(g));
      }
      // I : m = soc(I) + I.
      CHECK(colon_by_maximal(ideal) == sum(soc, ideal));
    }
  }

  SUBCASE("Veronese socle against a brute-force colon") {
    MonomialIdeal ideal = veronese_type({1, 1, 1}, 2);
    MonomialIdeal soc = socle(ideal);
    std::vector<Monomial> expected;
    for (const Monomial& w : monomials_of_degree(3, 1)) {
      bool in = true;
      for (int i = 0; i < 3 && in; ++i)
        if (!ideal.contains(w * Monomial::variable(3, i))) in = false;
      if (in) expected.push_back(w);
    }
    CHECK(soc == MonomialIdeal::from_generators(3, expected));
    if (!soc.is_zero()) {
      MonomialIdeal shifted = product(MonomialIdeal::maximal_ideal(3), soc);
      for (const Monomial& g : shifted.generators()) CHECK(ideal.contains(g));
    }
  }
}

TEST_CASE("every constructor family is componentwise polymatroidal") {
  InstanceSampler sampler(46);
  for (int trial = 0; trial < 15; ++trial) {
    CHECK(is_componentwise_polymatroidal(sampler.veronese()).holds);
    CHECK(is_componentwise_polymatroidal(sampler.borel()).holds);
    CHECK(is_componentwise_polymatroidal(sampler.fat_points()).holds);
    CHECK(is_componentwise_polymatroidal(sampler.layered()).holds);
  }
}

TEST_SUITE_END();
