#include "lqshell/constructors.hpp"

#include <algorithm>
#include <stdexcept>

#include "lqshell/polymatroid.hpp"

namespace lqshell {

MonomialIdeal veronese_type(const std::vector<Exp>& bound, int degree) {
  if (degree < 1) throw std::invalid_argument("Veronese degree must be >= 1");
  for (Exp b : bound)
    if (b < 0) throw std::invalid_argument("negative Veronese bound");
  const int n = static_cast<int>(bound.size());
  const Monomial cap = Monomial(std::vector<Exp>(bound));
  std::vector<Monomial> gens;
  for (const Monomial& m : monomials_of_degree(n, degree))
    if (divides(m, cap)) gens.push_back(m);
  return MonomialIdeal::from_generators(n, std::move(gens));
}

bool borel_leq(const Monomial& v, const Monomial& u) {
  if (v.degree() != u.degree())
    throw std::invalid_argument("Borel order compares equal degrees only");
  if (v.nvars() != u.nvars())
    throw std::invalid_argument("monomials live in different rings");
  // Positionwise comparison of sorted index multisets, phrased with prefix
  // sums: v is Borel-below u iff v uses at least as many variables <= t as u
  // does, for every t.
  long long sum_v = 0, sum_u = 0;
  for (int t = 0; t < v.nvars(); ++t) {
    sum_v += v[t];
    sum_u += u[t];
    if (sum_v < sum_u) return false;
  }
  return true;
}

MonomialIdeal principal_borel(const Monomial& u) {
  if (u.degree() < 1)
    throw std::invalid_argument("principal Borel generator must have degree >= 1");
  std::vector<Monomial> gens;
  for (const Monomial& m : monomials_of_degree(u.nvars(), u.degree()))
    if (borel_leq(m, u)) gens.push_back(m);
  return MonomialIdeal::from_generators(u.nvars(), std::move(gens));
}

bool is_componentwise_principal_borel(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return true;
  DegreeRange range = degree_range(ideal);
  const Monomial last_var =
      Monomial::variable(ideal.nvars(), ideal.nvars() - 1);
  std::optional<Monomial> previous;
  for (int j = std::max(range.initial, 1); j <= range.top; ++j) {
    MonomialIdeal comp = component(ideal, j);
    // The candidate generator is the unique Borel-maximum of the component.
    std::optional<Monomial> top;
    for (const Monomial& g : comp.generators()) {
      bool dominates = true;
      for (const Monomial& h : comp.generators())
        if (!borel_leq(h, g)) {
          dominates = false;
          break;
        }
      if (dominates) {
        top = g;
        break;
      }
    }
    if (!top) return false;
    if (principal_borel(*top) != comp) return false;
    if (previous && !borel_leq(*previous * last_var, *top)) return false;
    previous = top;
  }
  return true;
}

MonomialIdeal variable_power_ideal(int nvars, const std::vector<int>& vars,
                                   int k) {
  if (vars.empty()) throw std::invalid_argument("empty variable set");
  if (k < 1) throw std::invalid_argument("power must be >= 1");
  for (int v : vars)
    if (v < 0 || v >= nvars)
      throw std::invalid_argument("variable index out of range");
  std::vector<int> members = vars;  // a set: repeated indices collapse
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Monomial> gens;
  for (const Monomial& m :
       monomials_of_degree(static_cast<int>(members.size()), k)) {
    std::vector<Exp> e(static_cast<size_t>(nvars), 0);
    for (size_t i = 0; i < members.size(); ++i)
      e[static_cast<size_t>(members[i])] = m[static_cast<int>(i)];
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::from_generators(nvars, std::move(gens));
}

FatPointIdeal fat_point_ideal(int nvars,
                              const std::vector<std::vector<int>>& sets,
                              const std::vector<int>& powers) {
  if (sets.empty() || sets.size() != powers.size())
    throw std::invalid_argument("need matching nonempty set and power lists");
  FatPointIdeal result;
  result.ideal = variable_power_ideal(nvars, sets[0], powers[0]);
  for (size_t i = 1; i < sets.size(); ++i)
    result.ideal = intersect(result.ideal,
                             variable_power_ideal(nvars, sets[i], powers[i]));
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<bool> seen(static_cast<size_t>(nvars), false);
      for (int v : sets[i]) seen[static_cast<size_t>(v)] = true;
      for (int v : sets[j]) seen[static_cast<size_t>(v)] = true;
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        result.covering = false;
        result.bad_pairs.emplace_back(static_cast<int>(i),
                                      static_cast<int>(j));
      }
    }
  }
  return result;
}

MonomialIdeal layered_sum(const std::vector<MonomialIdeal>& layers,
                          bool validate) {
  if (layers.empty()) throw std::invalid_argument("no layers");
  const int n = layers.front().nvars();
  std::vector<int> degrees;
  for (const MonomialIdeal& layer : layers) {
    if (layer.nvars() != n)
      throw std::invalid_argument("layers live in different rings");
    auto d = layer.equigenerated_degree();
    if (!d) throw std::domain_error("layer is not equigenerated");
    degrees.push_back(*d);
  }
  for (size_t i = 1; i < layers.size(); ++i)
    if (degrees[i - 1] >= degrees[i])
      throw std::domain_error("layer degrees must strictly increase");
  if (validate) {
    for (size_t i = 0; i < layers.size(); ++i) {
      ExchangeCheck check = is_polymatroidal(layers[i]);
      if (!check.holds)
        throw std::domain_error("layer " + std::to_string(i + 1) +
                                " is not polymatroidal");
    }
    for (size_t i = 0; i + 1 < layers.size(); ++i) {
      int gap = degrees[i + 1] - degrees[i];
      for (const Monomial& g : layers[i].generators())
        for (const Monomial& pad : monomials_of_degree(n, gap))
          if (!layers[i + 1].contains(g * pad))
            throw std::domain_error(
                "layer inclusion fails: " + format_monomial(g * pad) +
                " is not in layer " + std::to_string(i + 2));
    }
  }
  MonomialIdeal result = layers.front();
  for (size_t i = 1; i < layers.size(); ++i) result = sum(result, layers[i]);
  return result;
}

MonomialIdeal socle(const MonomialIdeal& ideal) {
  auto d = ideal.equigenerated_degree();
  if (!d) throw std::invalid_argument("socle requires an equigenerated ideal");
  if (*d < 1) throw std::invalid_argument("socle requires degree >= 1");
  return component(colon_by_maximal(ideal), *d - 1);
}

}  // namespace lqshell
