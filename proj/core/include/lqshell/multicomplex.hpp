#pragma once

#include <vector>

#include "lqshell/ideal.hpp"
#include "lqshell/polymatroid.hpp"

namespace lqshell {

/// A simplicial multicomplex on vertex set {1..n}, stored by its facets: an
/// antichain of nonzero exponent vectors. The faces are all vectors below
/// some facet. Every unit vector must be a face, i.e. every vertex appears
/// with positive exponent in some facet.
class Multicomplex {
public:
  /// Keeps the maximal candidates, then validates. Throws
  /// std::invalid_argument on an empty or zero-vector input and
  /// std::domain_error when some vertex is covered by no facet.
  static Multicomplex from_facet_candidates(int nvars,
                                            std::vector<Monomial> candidates);

  /// Trusts `facets` to be a sorted antichain and skips the vertex-cover
  /// check. Truncation sums may legitimately lose vertices, so they are
  /// built through this path.
  static Multicomplex from_maximal_unchecked(int nvars,
                                             std::vector<Monomial> facets);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& facets() const { return facets_; }

  friend bool operator==(const Multicomplex&, const Multicomplex&) = default;

private:
  int nvars_ = 0;
  std::vector<Monomial> facets_;
};

/// Mutually inverse on valid inputs: minimal generators and facets are both
/// antichains. ideal_to_multicomplex requires a proper nonzero ideal whose
/// generators cover every variable (restrict_to_support first when they do
/// not).
Multicomplex ideal_to_multicomplex(const MonomialIdeal& ideal);
MonomialIdeal facet_ideal(const Multicomplex& mc);

struct MulticomplexStats {
  int dimension;       // omega - 1
  int initial_degree;  // alpha: least facet degree
  int top_degree;      // omega: greatest facet degree
  bool pure;           // alpha == omega
};
MulticomplexStats stats(const Multicomplex& mc);

struct ShellStep {
  int position = 0;
  /// 1-based variables x_t for which some earlier facet b has
  /// b / gcd(b, a_j) = x_t. These are the directions along which the new
  /// facet attaches to the earlier ones.
  std::vector<int> attach_directions;
};

/// Certificate for a facet order. When invalid, `failed_position` is the
/// first position j whose attachment fails and `blocking_facet` an earlier
/// facet none of whose excess directions over a_j is attachable.
struct ShellingCertificate {
  bool valid = false;
  int failed_position = 0;
  Monomial blocking_facet;
  std::vector<ShellStep> steps;
};

/// Shelling check for a facet order a_1, ..., a_m: position j is accepted
/// when for every earlier facet b there are a direction t with b[t] > a_j[t]
/// and an earlier facet c with c / gcd(c, a_j) = x_t. This is exactly the
/// condition that each prefix of the order attaches the new facet along
/// codimension-one faces, and a facet order satisfies it if and only if the
/// corresponding monomial order is a linear-quotients order of the facet
/// ideal. Implemented directly on the exponent vectors, independently of the
/// colon-ideal machinery, so the two routes can be checked against each
/// other. Throws std::invalid_argument when `order` is not a permutation of
/// the facets.
ShellingCertificate verify_shelling(const Multicomplex& mc,
                                    const std::vector<Monomial>& order);

/// Facet order induced by synthesize_lq_order on the facet ideal. Validates
/// that the facet ideal is componentwise polymatroidal (throws
/// std::domain_error with the witness otherwise); the returned order always
/// passes verify_shelling.
std::vector<Monomial> shelling_order(const Multicomplex& mc);

/// All pairwise sums a + b, deduplicated, in canonical order.
std::vector<Monomial> minkowski_sum(const std::vector<Monomial>& a,
                                    const std::vector<Monomial>& b);
/// The full simplex {a : |a| <= degree} as a face list, in canonical order.
std::vector<Monomial> simplex_faces(int nvars, int degree);

/// The truncation sum at level j: the multicomplex spanned by
///   union over k in [alpha, j] of  F_k + simplex(j - k),
/// where F_k collects the facets of degree <= k. Pure with all facets of
/// degree j; its facet ideal equals component(facet_ideal(mc), j). Requires
/// alpha <= j <= omega. The result may not cover every vertex, so it skips
/// the cover check.
Multicomplex truncation_sum(const Multicomplex& mc, int j);

/// Three independent routes to the same predicate on a multicomplex P:
///   facet_ideal_components - is_componentwise_polymatroidal(facet_ideal(P)),
///     the defining property;
///   truncation_sums - every truncation_sum(P, j) for j in [alpha, omega] is
///     a discrete polymatroid (polymatroidal facet ideal);
///   exchange_on_union - the one-step exchange condition checked directly on
///     the union of all truncation-sum faces up to omega.
/// The three answers agree; computing them separately is what makes that an
/// observable test invariant.
enum class PolymatroidRoute {
  facet_ideal_components,
  truncation_sums,
  exchange_on_union,
};

ExchangeCheck is_componentwise_discrete_polymatroid(
    const Multicomplex& mc,
    PolymatroidRoute route = PolymatroidRoute::facet_ideal_components);

}  // namespace lqshell
