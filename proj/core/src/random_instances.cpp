#include "lqshell/random_instances.hpp"

#include <algorithm>
#include <numeric>

#include "lqshell/constructors.hpp"

namespace lqshell {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
  rng.next();
  return rng.next();
}

InstanceSampler::InstanceSampler(std::uint64_t seed, SamplerConfig config)
    : rng_(seed), config_(config) {}

Monomial InstanceSampler::random_monomial(int nvars, int degree) {
  std::vector<Exp> e(static_cast<size_t>(nvars), 0);
  for (int i = 0; i < degree; ++i) e[static_cast<size_t>(rng_.below(nvars))] += 1;
  return Monomial(std::move(e));
}

namespace {

MonomialIdeal veronese_in(Rng& rng, int n, int max_degree) {
  const int d = rng.between(1, std::max(1, std::min(4, max_degree)));
  // Bounds skewed small so the cap actually binds; bumped when they cannot
  // reach the degree at all.
  std::vector<Exp> bound(static_cast<size_t>(n));
  for (Exp& b : bound) b = static_cast<Exp>(rng.between(0, d));
  if (std::accumulate(bound.begin(), bound.end(), 0) < d)
    bound[static_cast<size_t>(rng.below(n))] += static_cast<Exp>(d);
  return veronese_type(bound, d);
}

MonomialIdeal borel_in(Rng& rng, int n, int max_degree,
                       InstanceSampler& sampler) {
  const int d = rng.between(1, std::max(1, std::min(4, max_degree)));
  return principal_borel(sampler.random_monomial(n, d));
}

MonomialIdeal variable_power_in(Rng& rng, int n, int max_degree) {
  std::vector<int> vars;
  for (int i = 0; i < n; ++i)
    if (rng.below(3) != 0) vars.push_back(i);
  if (vars.empty()) vars.push_back(rng.below(n));
  return variable_power_ideal(n, vars, rng.between(1, std::max(1, std::min(3, max_degree))));
}

}  // namespace

MonomialIdeal InstanceSampler::veronese() {
  const int n = rng_.between(config_.min_nvars, config_.max_nvars);
  return veronese_in(rng_, n, config_.max_degree);
}

MonomialIdeal InstanceSampler::borel() {
  const int n = rng_.between(config_.min_nvars, config_.max_nvars);
  return borel_in(rng_, n, config_.max_degree, *this);
}

MonomialIdeal InstanceSampler::fat_points() {
  const int n = rng_.between(config_.min_nvars, config_.max_nvars);
  const int t = rng_.between(2, 3);
  // Complements chosen pairwise disjoint, so every union A_i cup A_j is the
  // whole vertex set and the intersection stays componentwise polymatroidal.
  std::vector<int> owner(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) owner[static_cast<size_t>(i)] = rng_.below(t + 1);
  std::vector<std::vector<int>> sets(static_cast<size_t>(t));
  for (int s = 0; s < t; ++s) {
    for (int i = 0; i < n; ++i)
      if (owner[static_cast<size_t>(i)] != s) sets[static_cast<size_t>(s)].push_back(i);
    if (sets[static_cast<size_t>(s)].empty())
      sets[static_cast<size_t>(s)].push_back(rng_.below(n));
  }
  std::vector<int> powers(static_cast<size_t>(t));
  int budget = std::max(2, config_.max_degree);
  for (int s = 0; s < t; ++s) {
    int hi = std::max(1, budget / (t - s));
    powers[static_cast<size_t>(s)] = rng_.between(1, std::min(3, hi));
    budget -= powers[static_cast<size_t>(s)];
  }
  return fat_point_ideal(n, sets, powers).ideal;
}

MonomialIdeal InstanceSampler::layered() {
  const int n = rng_.between(config_.min_nvars, config_.max_nvars);
  const int layers = rng_.between(2, 3);
  const int d1 = rng_.between(1, 2);
  std::vector<MonomialIdeal> parts;

  if (rng_.below(2) == 0 || n < 2) {
    // Veronese tower: widening the bound by the degree gap keeps each layer
    // inside the next.
    std::vector<Exp> bound(static_cast<size_t>(n));
    for (Exp& b : bound) b = static_cast<Exp>(rng_.between(0, d1));
    if (std::accumulate(bound.begin(), bound.end(), 0) < d1)
      bound[static_cast<size_t>(rng_.below(n))] += static_cast<Exp>(d1);
    int degree = d1;
    for (int l = 0; l < layers; ++l) {
      parts.push_back(veronese_type(bound, degree));
      int gap = rng_.between(1, 2);
      degree += gap;
      if (degree > config_.max_degree) break;
      for (Exp& b : bound) b = static_cast<Exp>(std::min<int>(b + gap, degree));
    }
  } else {
    // Borel tower: raising the index multiset of u * x_n^gap keeps each
    // m^gap B(u) inside the next layer.
    Monomial u = random_monomial(n, d1);
    int degree = d1;
    for (int l = 0; l < layers; ++l) {
      parts.push_back(principal_borel(u));
      int gap = rng_.between(1, 2);
      degree += gap;
      if (degree > config_.max_degree) break;
      std::vector<Exp> e = u.exponents();
      e[static_cast<size_t>(n - 1)] += static_cast<Exp>(gap);
      for (int moves = rng_.below(n); moves > 0; --moves) {
        int from = rng_.below(n - 1);
        if (e[static_cast<size_t>(from)] > 0) {
          e[static_cast<size_t>(from)] -= 1;
          e[static_cast<size_t>(from + rng_.between(1, n - 1 - from))] += 1;
        }
      }
      u = Monomial(std::move(e));
    }
  }
  if (parts.size() == 1) return parts.front();
  return layered_sum(parts, /*validate=*/true);
}

MonomialIdeal InstanceSampler::cwp_ideal() {
  switch (rng_.below(4)) {
    case 0: return veronese();
    case 1: return borel();
    case 2: return fat_points();
    default: return layered();
  }
}

MonomialIdeal InstanceSampler::polymatroidal() {
  const int n = rng_.between(config_.min_nvars, config_.max_nvars);
  switch (rng_.below(4)) {
    case 0: return veronese_in(rng_, n, config_.max_degree);
    case 1: return borel_in(rng_, n, config_.max_degree, *this);
    case 2: return variable_power_in(rng_, n, config_.max_degree);
    default: {
      // Product of two small factors in the same ring; products of
      // polymatroidal ideals are polymatroidal.
      const int half = std::max(1, config_.max_degree / 2);
      MonomialIdeal a, b;
      switch (rng_.below(3)) {
        case 0: a = veronese_in(rng_, n, half); break;
        case 1: a = borel_in(rng_, n, half, *this); break;
        default: a = variable_power_in(rng_, n, half); break;
      }
      switch (rng_.below(3)) {
        case 0: b = veronese_in(rng_, n, half); break;
        case 1: b = borel_in(rng_, n, half, *this); break;
        default: b = variable_power_in(rng_, n, half); break;
      }
      if (a.is_zero() || b.is_zero()) return a.is_zero() ? b : a;
      return product(a, b);
    }
  }
}

MonomialIdeal InstanceSampler::arbitrary_ideal() {
  const int n = rng_.between(config_.min_nvars, std::min(4, config_.max_nvars));
  const int count = rng_.between(2, 6);
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i)
    gens.push_back(
        random_monomial(n, rng_.between(1, std::min(5, config_.max_degree))));
  return MonomialIdeal::from_generators(n, std::move(gens));
}

}  // namespace lqshell
