// Exhaustive sweeps over every monomial ideal in a tiny box. Random
// sampling leaves gaps; here the whole space is covered, so the structural
// claims hold with no luck involved.

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "lqshell/linear_quotients.hpp"
#include "lqshell/multicomplex.hpp"
#include "lqshell/polymatroid.hpp"

using namespace lqshell;

namespace {

// All antichains assembled from the monomials of degree 1..4 in two
// variables (14 monomials, so the subset walk is cheap).
std::vector<MonomialIdeal> all_small_ideals() {
  std::vector<Monomial> pool;
  for (int d = 1; d <= 4; ++d)
    for (const Monomial& m : monomials_of_degree(2, d)) pool.push_back(m);

  std::vector<MonomialIdeal> ideals;
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    std::vector<Monomial> gens;
    for (size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) gens.push_back(pool[i]);
    MonomialIdeal ideal = MonomialIdeal::from_generators(2, gens);
    if (ideal.generators().size() == gens.size())  // already an antichain
      ideals.push_back(std::move(ideal));
  }
  std::sort(ideals.begin(), ideals.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return a.generators() < b.generators();
            });
  ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
  return ideals;
}

}  // namespace

TEST_SUITE_BEGIN("exhaustive_small");

TEST_CASE("every two-variable ideal in the degree-4 box") {
  std::vector<MonomialIdeal> ideals = all_small_ideals();
  REQUIRE(ideals.size() > 100);  // 166 antichains in the degree-4 box

  int cwp_count = 0, lq_count = 0;
  for (const MonomialIdeal& ideal : ideals) {
    bool cwp = is_componentwise_polymatroidal(ideal).holds;
    SearchResult search = search_lq_order(ideal, 100000);
    REQUIRE(search.status != SearchStatus::budget_exhausted);
    bool has_order = search.status == SearchStatus::found;

    // Componentwise polymatroidal forces an order, and synthesis finds one.
    if (cwp) {
      ++cwp_count;
      CHECK(has_order);
      CHECK(verify_linear_quotients(ideal, synthesize_order(ideal)).valid);
      int top = degree_range(ideal).top;
      CHECK(verify_exchange_condition_bounded(ideal, top + 2).holds);
      CHECK(verify_dual_exchange_bounded(ideal, top + 2).holds);
    } else {
      CHECK_FALSE(
          verify_exchange_condition_bounded(ideal, degree_range(ideal).top)
              .holds);
    }

    // An order forces componentwise orders.
    if (has_order) {
      ++lq_count;
      CHECK(verify_linear_quotients(ideal, search.order).valid);
      CHECK(has_componentwise_linear_quotients(ideal, 100000).all_found());
    }
  }
  // Census of the box. Componentwise polymatroidal always implies an order;
  // in two variables the converse holds as well (the two classes coincide
  // exactly here), so the counts agree.
  CHECK(ideals.size() == 130);
  CHECK(cwp_count == 87);
  CHECK(lq_count == cwp_count);
}

TEST_CASE("shelling equals linear quotients on every order of every small complex") {
  for (const MonomialIdeal& ideal : all_small_ideals()) {
    if (ideal.generators().size() > 5) continue;
    if (support(ideal).size() != 2) continue;  // need both vertices covered
    Multicomplex mc = ideal_to_multicomplex(ideal);

    std::vector<Monomial> order = mc.facets();
    std::sort(order.begin(), order.end());
    do {
      ShellingCertificate shell = verify_shelling(mc, order);
      OrderCertificate lq = verify_linear_quotients(ideal, order);
      CHECK(shell.valid == lq.valid);
      CHECK(shell.failed_position == lq.failed_position);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("the three characterization routes agree on every small complex") {
  for (const MonomialIdeal& ideal : all_small_ideals()) {
    if (support(ideal).size() != 2) continue;
    Multicomplex mc = ideal_to_multicomplex(ideal);
    bool a = is_componentwise_discrete_polymatroid(
                 mc, PolymatroidRoute::facet_ideal_components)
                 .holds;
    bool b = is_componentwise_discrete_polymatroid(
                 mc, PolymatroidRoute::truncation_sums)
                 .holds;
    bool c = is_componentwise_discrete_polymatroid(
                 mc, PolymatroidRoute::exchange_on_union)
                 .holds;
    CHECK(a == b);
    CHECK(b == c);

    MulticomplexStats st = stats(mc);
    for (int j = st.initial_degree; j <= st.top_degree; ++j)
      CHECK(facet_ideal(truncation_sum(mc, j)) == component(ideal, j));
  }
}

TEST_SUITE_END();
