#include "lqshell/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lqshell {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("ideals live in different rings");
}

bool degree_then_canonical(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials) {
  // Scanning in degree order means a candidate can only be divided by an
  // already-kept element, and equal-degree divisibility is equality.
  std::sort(monomials.begin(), monomials.end(), degree_then_canonical);
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::vector<Monomial> kept;
  for (const Monomial& m : monomials) {
    bool dominated = false;
    for (const Monomial& k : kept) {
      if (k.degree() >= m.degree()) break;  // kept is degree-sorted
      if (divides(k, m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Monomial> maximal_elements(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), degree_then_canonical);
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::reverse(monomials.begin(), monomials.end());  // degree descending
  std::vector<Monomial> kept;
  for (const Monomial& m : monomials) {
    bool dominated = false;
    for (const Monomial& k : kept) {
      if (k.degree() <= m.degree()) break;
      if (divides(m, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
  return principal(Monomial::one(nvars));
}

MonomialIdeal MonomialIdeal::principal(const Monomial& g) {
  MonomialIdeal ideal(g.nvars());
  ideal.gens_ = {g};
  return ideal;
}

MonomialIdeal MonomialIdeal::maximal_ideal(int nvars) {
  std::vector<Monomial> gens;
  gens.reserve(static_cast<size_t>(nvars));
  for (int i = 0; i < nvars; ++i) gens.push_back(Monomial::variable(nvars, i));
  return from_generators(nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_generators(int nvars,
                                             std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.nvars() != nvars)
      throw std::invalid_argument("generator has wrong number of variables");
  MonomialIdeal ideal(nvars);
  ideal.gens_ = minimal_elements(std::move(gens));
  return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_)
    throw std::invalid_argument("monomial has wrong number of variables");
  for (const Monomial& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

std::optional<int> MonomialIdeal::equigenerated_degree() const {
  if (gens_.empty()) return std::nullopt;
  int d = gens_.front().degree();
  for (const Monomial& g : gens_)
    if (g.degree() != d) return std::nullopt;
  return d;
}

DegreeRange degree_range(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw std::domain_error("degree range of the zero ideal");
  int lo = ideal.generators().front().degree(), hi = lo;
  for (const Monomial& g : ideal.generators()) {
    lo = std::min(lo, g.degree());
    hi = std::max(hi, g.degree());
  }
  return {lo, hi};
}

MonomialIdeal component(const MonomialIdeal& ideal, int degree) {
  if (degree < 0) throw std::invalid_argument("negative component degree");
  std::vector<Monomial> padded;
  for (const Monomial& g : ideal.generators()) {
    int gap = degree - g.degree();
    if (gap < 0) continue;
    for (const Monomial& pad : monomials_of_degree(ideal.nvars(), gap))
      padded.push_back(g * pad);
  }
  return MonomialIdeal::from_generators(ideal.nvars(), std::move(padded));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(quotient(g, gcd(g, v)));
  return MonomialIdeal::from_generators(ideal.nvars(), std::move(gens));
}

MonomialIdeal colon_by_maximal(const MonomialIdeal& ideal) {
  if (ideal.nvars() == 0 || ideal.is_zero()) return ideal;
  MonomialIdeal result = colon(ideal, Monomial::variable(ideal.nvars(), 0));
  for (int i = 1; i < ideal.nvars(); ++i)
    result = intersect(result, colon(ideal, Monomial::variable(ideal.nvars(), i)));
  return result;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(g * h);
  return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  MonomialIdeal result = ideal;
  for (int i = 1; i < k; ++i) result = product(result, ideal);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& w) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g * w);
  return MonomialIdeal::from_generators(ideal.nvars(), std::move(gens));
}

CommonFactor divide_out_common_factor(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw std::domain_error("common factor of the zero ideal");
  Monomial factor = ideal.generators().front();
  for (const Monomial& g : ideal.generators()) factor = gcd(factor, g);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(quotient(g, factor));
  return {factor, MonomialIdeal::from_generators(ideal.nvars(), std::move(gens))};
}

std::vector<int> support(const MonomialIdeal& ideal) {
  std::vector<int> vars;
  for (int i = 0; i < ideal.nvars(); ++i) {
    for (const Monomial& g : ideal.generators()) {
      if (g[i] > 0) {
        vars.push_back(i);
        break;
      }
    }
  }
  return vars;
}

SupportRestriction restrict_to_support(const MonomialIdeal& ideal) {
  std::vector<int> vars = support(ideal);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) {
    std::vector<Exp> e;
    e.reserve(vars.size());
    for (int v : vars) e.push_back(g[v]);
    gens.push_back(Monomial(std::move(e)));
  }
  return {vars, MonomialIdeal::from_generators(static_cast<int>(vars.size()),
                                               std::move(gens))};
}

}  // namespace lqshell
