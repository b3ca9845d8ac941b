#include "lqshell/linear_quotients.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "lqshell/polymatroid.hpp"

namespace lqshell {

namespace {

void require_permutation(const MonomialIdeal& ideal,
                         const std::vector<Monomial>& order) {
  std::vector<Monomial> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ideal.generators())
    throw std::invalid_argument(
        "order is not a permutation of the minimal generators");
}

std::vector<Monomial> colon_generators(const std::vector<Monomial>& prefix,
                                       const Monomial& next) {
  std::vector<Monomial> quotients;
  quotients.reserve(prefix.size());
  for (const Monomial& p : prefix) quotients.push_back(quotient(p, gcd(p, next)));
  return minimal_elements(std::move(quotients));
}

}  // namespace

OrderCertificate verify_linear_quotients(const MonomialIdeal& ideal,
                                         const std::vector<Monomial>& order) {
  require_permutation(ideal, order);
  OrderCertificate cert;
  cert.valid = true;
  std::vector<Monomial> prefix;
  prefix.reserve(order.size());
  for (size_t pos = 1; pos < order.size(); ++pos) {
    prefix.push_back(order[pos - 1]);
    ColonStep step;
    step.position = static_cast<int>(pos) + 1;
    step.colon_generators = colon_generators(prefix, order[pos]);
    bool linear = std::all_of(step.colon_generators.begin(),
                              step.colon_generators.end(),
                              [](const Monomial& g) { return g.degree() == 1; });
    cert.steps.push_back(std::move(step));
    if (!linear) {
      cert.valid = false;
      cert.failed_position = static_cast<int>(pos) + 1;
      return cert;
    }
  }
  return cert;
}

Split split(const MonomialIdeal& ideal, int var) {
  if (var < 0 || var >= ideal.nvars())
    throw std::invalid_argument("split variable out of range");
  std::vector<Monomial> divisible, rest;
  const Monomial xv = Monomial::variable(ideal.nvars(), var);
  for (const Monomial& g : ideal.generators()) {
    if (g[var] > 0)
      divisible.push_back(quotient(g, xv));
    else
      rest.push_back(g);
  }
  if (divisible.empty())
    throw std::domain_error("split variable divides no generator");
  return {MonomialIdeal::from_generators(ideal.nvars(), std::move(divisible)),
          MonomialIdeal::from_generators(ideal.nvars(), std::move(rest)), var};
}

std::vector<Monomial> synthesize_order(const MonomialIdeal& ideal) {
  if (ideal.generators().size() <= 1) return ideal.generators();

  CommonFactor common = divide_out_common_factor(ideal);
  const MonomialIdeal& stripped = common.stripped;

  // Smallest variable dividing a generator of least degree. Any admissible
  // choice yields a valid order for componentwise polymatroidal input; this
  // one makes the output deterministic.
  const int initial = degree_range(stripped).initial;
  int var = -1;
  for (int v = 0; v < stripped.nvars() && var == -1; ++v)
    for (const Monomial& g : stripped.generators())
      if (g.degree() == initial && g[v] > 0) {
        var = v;
        break;
      }

  Split parts = split(stripped, var);
  // Both blocks are strictly smaller: the generators have trivial common
  // factor, so neither block can be all of them.
  std::vector<Monomial> first = synthesize_order(parts.stripped_part);
  std::vector<Monomial> second = synthesize_order(parts.complement);

  const Monomial xv = Monomial::variable(ideal.nvars(), var);
  std::vector<Monomial> order;
  order.reserve(first.size() + second.size());
  for (const Monomial& g : first) order.push_back(g * xv * common.factor);
  for (const Monomial& g : second) order.push_back(g * common.factor);
  return order;
}

GeneratorOrder synthesize_lq_order(const MonomialIdeal& ideal, bool checked) {
  if (checked) {
    ExchangeCheck check = is_componentwise_polymatroidal(ideal);
    if (!check.holds) {
      const ExchangeWitness& w = *check.witness;
      throw std::domain_error(
          "not componentwise polymatroidal: component " +
          std::to_string(w.degree) + " fails exchange at u=" +
          format_monomial(w.u) + ", v=" + format_monomial(w.v) +
          ", i=" + std::to_string(w.var));
    }
  }
  GeneratorOrder result;
  result.order = synthesize_order(ideal);
  result.certificate = verify_linear_quotients(ideal, result.order);
  if (checked && !result.certificate.valid)
    throw std::logic_error("synthesized order failed verification");
  return result;
}

namespace {

struct SearchState {
  const std::vector<Monomial>* gens;
  int nvars;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;
  std::vector<bool> used;
  std::vector<Monomial> chosen;
  std::uint64_t chosen_mask = 0;
  // Whether a prefix can be completed depends only on the set of chosen
  // generators, not on their order, so fully-explored dead ends are
  // remembered by mask. Only proven subtrees are cached: a subtree cut off
  // by the budget says nothing about the set.
  std::unordered_set<std::uint64_t> dead_sets;
  static constexpr size_t kDeadSetCap = 1u << 22;

  // The prefix colon against `next` is variable-generated iff every quotient
  // p/gcd(p, next) is divisible by a quotient that is a single variable.
  bool extends(const Monomial& next) {
    if (chosen.empty()) return true;
    std::vector<bool> unit_direction(static_cast<size_t>(nvars), false);
    std::vector<Monomial> quotients;
    quotients.reserve(chosen.size());
    for (const Monomial& p : chosen) {
      Monomial q = quotient(p, gcd(p, next));
      if (q.degree() == 1) {
        for (int t = 0; t < nvars; ++t)
          if (q[t] == 1) unit_direction[static_cast<size_t>(t)] = true;
      }
      quotients.push_back(std::move(q));
    }
    for (const Monomial& q : quotients) {
      if (q.degree() == 1) continue;
      bool covered = false;
      for (int t = 0; t < nvars && !covered; ++t)
        if (unit_direction[static_cast<size_t>(t)] && q[t] >= 1) covered = true;
      if (!covered) return false;
    }
    return true;
  }

  bool dfs() {
    if (chosen.size() == gens->size()) return true;
    const bool memo = gens->size() <= 64;
    for (size_t idx = 0; idx < gens->size(); ++idx) {
      if (used[idx]) continue;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      if (!extends((*gens)[idx])) continue;
      const std::uint64_t next_mask =
          memo ? (chosen_mask | (1ULL << idx)) : 0;
      if (memo && dead_sets.contains(next_mask)) continue;
      used[idx] = true;
      chosen.push_back((*gens)[idx]);
      chosen_mask = next_mask;
      if (dfs()) return true;
      chosen.pop_back();
      chosen_mask = memo ? (next_mask & ~(1ULL << idx)) : 0;
      used[idx] = false;
      if (exhausted) return false;
      // This set is now proven dead: every continuation under it was either
      // non-extendable, a cached dead set, or recursively explored to
      // completion. The cap bounds memory, not soundness.
      if (memo && dead_sets.size() < kDeadSetCap) dead_sets.insert(next_mask);
    }
    return false;
  }
};

}  // namespace

SearchResult search_lq_order(const MonomialIdeal& ideal, long long budget) {
  SearchResult result;
  if (ideal.generators().size() <= 1) {
    result.status = SearchStatus::found;
    result.order = ideal.generators();
    return result;
  }
  SearchState state;
  state.gens = &ideal.generators();
  state.nvars = ideal.nvars();
  state.budget = budget;
  state.used.assign(ideal.generators().size(), false);
  bool found = state.dfs();
  result.nodes = state.nodes;
  if (found) {
    result.status = SearchStatus::found;
    result.order = std::move(state.chosen);
  } else {
    result.status = state.exhausted ? SearchStatus::budget_exhausted
                                    : SearchStatus::none_exists;
  }
  return result;
}

bool ComponentwiseLq::all_found() const {
  return std::all_of(per_degree.begin(), per_degree.end(), [](const auto& e) {
    return e.second == SearchStatus::found;
  });
}

bool ComponentwiseLq::any_infeasible() const {
  return std::any_of(per_degree.begin(), per_degree.end(), [](const auto& e) {
    return e.second == SearchStatus::none_exists;
  });
}

ComponentwiseLq has_componentwise_linear_quotients(const MonomialIdeal& ideal,
                                                   long long budget) {
  ComponentwiseLq result;
  if (ideal.is_zero()) return result;
  DegreeRange range = degree_range(ideal);
  for (int j = range.initial; j <= range.top + 1; ++j)
    result.per_degree[j] = search_lq_order(component(ideal, j), budget).status;
  return result;
}

}  // namespace lqshell
