#include "lqshell/multicomplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lqshell/linear_quotients.hpp"

namespace lqshell {

namespace {

void require_vertex_cover(int nvars, const std::vector<Monomial>& facets) {
  for (int i = 0; i < nvars; ++i) {
    bool covered = false;
    for (const Monomial& f : facets)
      if (f[i] > 0) {
        covered = true;
        break;
      }
    if (!covered)
      throw std::domain_error("vertex " + std::to_string(i + 1) +
                              " appears in no facet, so x" +
                              std::to_string(i + 1) + " is not a face");
  }
}

}  // namespace

Multicomplex Multicomplex::from_facet_candidates(
    int nvars, std::vector<Monomial> candidates) {
  if (candidates.empty())
    throw std::invalid_argument("a multicomplex needs at least one facet");
  for (const Monomial& c : candidates) {
    if (c.nvars() != nvars)
      throw std::invalid_argument("facet has wrong number of variables");
    if (c.is_one()) throw std::invalid_argument("zero vector cannot be a facet");
  }
  Multicomplex mc;
  mc.nvars_ = nvars;
  mc.facets_ = maximal_elements(std::move(candidates));
  require_vertex_cover(nvars, mc.facets_);
  return mc;
}

Multicomplex Multicomplex::from_maximal_unchecked(int nvars,
                                                  std::vector<Monomial> facets) {
  Multicomplex mc;
  mc.nvars_ = nvars;
  mc.facets_ = std::move(facets);
  return mc;
}

Multicomplex ideal_to_multicomplex(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("only proper nonzero ideals define multicomplexes");
  return Multicomplex::from_facet_candidates(ideal.nvars(),
                                             ideal.generators());
}

MonomialIdeal facet_ideal(const Multicomplex& mc) {
  return MonomialIdeal::from_generators(mc.nvars(), mc.facets());
}

MulticomplexStats stats(const Multicomplex& mc) {
  int lo = mc.facets().front().degree(), hi = lo;
  for (const Monomial& f : mc.facets()) {
    lo = std::min(lo, f.degree());
    hi = std::max(hi, f.degree());
  }
  return {hi - 1, lo, hi, lo == hi};
}

ShellingCertificate verify_shelling(const Multicomplex& mc,
                                    const std::vector<Monomial>& order) {
  {
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != mc.facets())
      throw std::invalid_argument("order is not a permutation of the facets");
  }
  ShellingCertificate cert;
  cert.valid = true;
  const int n = mc.nvars();
  for (size_t pos = 1; pos < order.size(); ++pos) {
    const Monomial& facet = order[pos];
    // Directions in which some earlier facet sticks exactly one step out of
    // the shadow of the new facet.
    std::vector<bool> attach(static_cast<size_t>(n), false);
    for (size_t prev = 0; prev < pos; ++prev) {
      Monomial excess = quotient(order[prev], gcd(order[prev], facet));
      if (excess.degree() != 1) continue;
      for (int t = 0; t < n; ++t)
        if (excess[t] == 1) attach[static_cast<size_t>(t)] = true;
    }
    // Every earlier facet must exceed the new one in some attachable
    // direction; otherwise its overlap cannot be pushed to codimension one.
    for (size_t prev = 0; prev < pos; ++prev) {
      bool reachable = false;
      for (int t = 0; t < n && !reachable; ++t)
        if (order[prev][t] > facet[t] && attach[static_cast<size_t>(t)])
          reachable = true;
      if (!reachable) {
        cert.valid = false;
        cert.failed_position = static_cast<int>(pos) + 1;
        cert.blocking_facet = order[prev];
        return cert;
      }
    }
    ShellStep step;
    step.position = static_cast<int>(pos) + 1;
    for (int t = 0; t < n; ++t)
      if (attach[static_cast<size_t>(t)]) step.attach_directions.push_back(t + 1);
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

std::vector<Monomial> shelling_order(const Multicomplex& mc) {
  return synthesize_lq_order(facet_ideal(mc), /*checked=*/true).order;
}

std::vector<Monomial> minkowski_sum(const std::vector<Monomial>& a,
                                    const std::vector<Monomial>& b) {
  std::set<Monomial> sums;
  for (const Monomial& x : a)
    for (const Monomial& y : b) sums.insert(x * y);
  return {sums.begin(), sums.end()};
}

std::vector<Monomial> simplex_faces(int nvars, int degree) {
  std::vector<Monomial> faces;
  for (int d = 0; d <= degree; ++d)
    for (const Monomial& m : monomials_of_degree(nvars, d)) faces.push_back(m);
  return faces;
}

namespace {

std::vector<Monomial> facets_up_to(const Multicomplex& mc, int degree) {
  std::vector<Monomial> out;
  for (const Monomial& f : mc.facets())
    if (f.degree() <= degree) out.push_back(f);
  return out;
}

// Union over k in [alpha, j] of F_k + simplex(j - k), as a face set.
std::set<Monomial> truncation_faces(const Multicomplex& mc, int j) {
  std::set<Monomial> faces;
  const int alpha = stats(mc).initial_degree;
  for (int k = alpha; k <= j; ++k) {
    std::vector<Monomial> base = facets_up_to(mc, k);
    if (base.empty()) continue;
    for (const Monomial& m : minkowski_sum(base, simplex_faces(mc.nvars(), j - k)))
      faces.insert(m);
  }
  return faces;
}

}  // namespace

Multicomplex truncation_sum(const Multicomplex& mc, int j) {
  MulticomplexStats st = stats(mc);
  if (j < st.initial_degree || j > st.top_degree)
    throw std::invalid_argument("truncation level must lie in [alpha, omega]");
  std::set<Monomial> faces = truncation_faces(mc, j);
  return Multicomplex::from_maximal_unchecked(
      mc.nvars(),
      maximal_elements(std::vector<Monomial>(faces.begin(), faces.end())));
}

ExchangeCheck is_componentwise_discrete_polymatroid(const Multicomplex& mc,
                                                    PolymatroidRoute route) {
  const MulticomplexStats st = stats(mc);
  switch (route) {
    case PolymatroidRoute::facet_ideal_components:
      return is_componentwise_polymatroidal(facet_ideal(mc));

    case PolymatroidRoute::truncation_sums: {
      for (int j = st.initial_degree; j <= st.top_degree; ++j) {
        ExchangeCheck check =
            is_polymatroidal(facet_ideal(truncation_sum(mc, j)));
        if (!check.holds) {
          check.witness->degree = j;
          return check;
        }
      }
      return {true, std::nullopt};
    }

    case PolymatroidRoute::exchange_on_union: {
      // The union of all truncation-sum face sets up to omega, checked
      // directly against the one-step exchange condition.
      std::set<Monomial> everything;
      for (int level = st.initial_degree; level <= st.top_degree; ++level)
        everything.merge(truncation_faces(mc, level));
      std::vector<std::vector<Monomial>> by_degree(
          static_cast<size_t>(st.top_degree) + 1);
      for (const Monomial& m : everything) {
        int d = m.degree();
        if (d <= st.top_degree) by_degree[static_cast<size_t>(d)].push_back(m);
      }
      for (auto& level : by_degree) std::sort(level.begin(), level.end());

      const int n = mc.nvars();
      for (int da = st.initial_degree; da <= st.top_degree; ++da) {
        for (int db = da; db <= st.top_degree; ++db) {
          const auto& bs = by_degree[static_cast<size_t>(db)];
          for (const Monomial& a : by_degree[static_cast<size_t>(da)]) {
            for (const Monomial& b : bs) {
              if (divides(a, b)) continue;
              for (int i = 0; i < n; ++i) {
                if (b[i] <= a[i]) continue;
                bool exchanged = false;
                for (int j = 0; j < n && !exchanged; ++j)
                  if (b[j] < a[j] &&
                      std::binary_search(bs.begin(), bs.end(), b.exchange(i, j)))
                    exchanged = true;
                if (!exchanged)
                  return {false, ExchangeWitness{a, b, i + 1, db}};
              }
            }
          }
        }
      }
      return {true, std::nullopt};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace lqshell
