#include "lqshell/polymatroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lqshell {

namespace {

bool generator_lookup(const std::vector<Monomial>& sorted_gens,
                      const Monomial& m) {
  return std::binary_search(sorted_gens.begin(), sorted_gens.end(), m);
}

int required_equigenerated_degree(const MonomialIdeal& ideal,
                                  const char* what) {
  auto d = ideal.equigenerated_degree();
  if (!d)
    throw std::invalid_argument(std::string(what) +
                                " requires an equigenerated ideal");
  return *d;
}

// Monomials of the ideal, grouped by degree 0..cap, each level in canonical
// order. Level d of an equigenerated ideal at its generator degree is
// exactly the generator list.
std::vector<std::vector<Monomial>> levels_up_to(const MonomialIdeal& ideal,
                                                int cap) {
  std::vector<std::vector<Monomial>> levels(static_cast<size_t>(cap) + 1);
  for (int d = 0; d <= cap; ++d)
    for (const Monomial& m : monomials_of_degree(ideal.nvars(), d))
      if (ideal.contains(m)) levels[static_cast<size_t>(d)].push_back(m);
  return levels;
}

}  // namespace

ExchangeCheck is_polymatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return {true, std::nullopt};
  int d = required_equigenerated_degree(ideal, "is_polymatroidal");
  const std::vector<Monomial>& gens = ideal.generators();
  const int n = ideal.nvars();
  for (const Monomial& u : gens) {
    for (const Monomial& v : gens) {
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < n && !exchanged; ++j)
          if (u[j] < v[j] && generator_lookup(gens, u.exchange(i, j)))
            exchanged = true;
        if (!exchanged)
          return {false, ExchangeWitness{u, v, i + 1, d}};
      }
    }
  }
  return {true, std::nullopt};
}

ExchangeCheck is_componentwise_polymatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return {true, std::nullopt};
  DegreeRange range = degree_range(ideal);
  for (int j = range.initial; j <= range.top; ++j) {
    ExchangeCheck check = is_polymatroidal(component(ideal, j));
    if (!check.holds) {
      check.witness->degree = j;
      return check;
    }
  }
  return {true, std::nullopt};
}

ExchangeCheck verify_exchange_condition_bounded(const MonomialIdeal& ideal,
                                                int cap) {
  if (ideal.is_zero()) return {true, std::nullopt};
  if (cap < degree_range(ideal).top)
    throw std::invalid_argument("cap below the top generator degree");
  const int n = ideal.nvars();
  auto levels = levels_up_to(ideal, cap);
  for (int du = 0; du <= cap; ++du) {
    for (int dv = du; dv <= cap; ++dv) {
      const auto& vs = levels[static_cast<size_t>(dv)];
      for (const Monomial& u : levels[static_cast<size_t>(du)]) {
        for (const Monomial& v : vs) {
          if (divides(u, v)) continue;
          for (int i = 0; i < n; ++i) {
            if (v[i] <= u[i]) continue;
            bool exchanged = false;
            for (int j = 0; j < n && !exchanged; ++j)
              if (v[j] < u[j] &&
                  std::binary_search(vs.begin(), vs.end(), v.exchange(i, j)))
                exchanged = true;
            if (!exchanged)
              return {false, ExchangeWitness{u, v, i + 1, dv}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

ExchangeCheck verify_dual_exchange_bounded(const MonomialIdeal& ideal,
                                           int cap) {
  if (ideal.is_zero()) return {true, std::nullopt};
  if (cap < degree_range(ideal).top)
    throw std::invalid_argument("cap below the top generator degree");
  const int n = ideal.nvars();
  auto levels = levels_up_to(ideal, cap);
  for (int du = 0; du <= cap; ++du) {
    for (int dv = du; dv <= cap; ++dv) {
      const auto& vs = levels[static_cast<size_t>(dv)];
      for (const Monomial& u : levels[static_cast<size_t>(du)]) {
        for (const Monomial& v : vs) {
          for (int i = 0; i < n; ++i) {
            if (v[i] >= u[i]) continue;
            bool exchanged = false;
            for (int j = 0; j < n && !exchanged; ++j)
              if (v[j] > u[j] &&
                  std::binary_search(vs.begin(), vs.end(), v.exchange(j, i)))
                exchanged = true;
            if (!exchanged)
              return {false, ExchangeWitness{u, v, i + 1, dv}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

ExchangeCheck has_strong_exchange(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return {true, std::nullopt};
  int d = required_equigenerated_degree(ideal, "has_strong_exchange");
  const std::vector<Monomial>& gens = ideal.generators();
  const int n = ideal.nvars();
  for (const Monomial& u : gens) {
    for (const Monomial& v : gens) {
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (u[j] >= v[j]) continue;
          if (!generator_lookup(gens, u.exchange(i, j)))
            return {false, ExchangeWitness{u, v, i + 1, d}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace lqshell
