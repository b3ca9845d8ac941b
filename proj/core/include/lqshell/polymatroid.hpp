#pragma once

#include <optional>

#include "lqshell/ideal.hpp"

namespace lqshell {

/// Witness of a failed exchange condition. `var` is the 1-based index of the
/// variable whose exchange could not be completed; `degree` is the degree at
/// which the failure happened (the component degree for componentwise checks,
/// the degree of `v` for the bounded verifiers).
struct ExchangeWitness {
  Monomial u;
  Monomial v;
  int var = 0;
  int degree = 0;
};

struct ExchangeCheck {
  bool holds = false;
  std::optional<ExchangeWitness> witness;
};

/// Exchange property for the bases of a discrete polymatroid: for all
/// generators u, v and every i with deg_{x_i}(u) > deg_{x_i}(v) there is a j
/// with deg_{x_j}(u) < deg_{x_j}(v) such that x_j * (u / x_i) is again a
/// generator. Decides whether an equigenerated ideal is polymatroidal.
///
/// The input must be equigenerated (throws std::invalid_argument otherwise).
/// Zero and unit ideals count as polymatroidal: the condition quantifies over
/// pairs that do not exist. On failure the witness is the first violating
/// (u, v, i) in canonical iteration order.
ExchangeCheck is_polymatroidal(const MonomialIdeal& ideal);

/// True when every graded component in [alpha(I), omega(I)] is polymatroidal.
/// Components beyond omega need no check: they are products of a power of the
/// maximal ideal with the top component. Failure reports the offending degree
/// together with the exchange witness of that component.
ExchangeCheck is_componentwise_polymatroidal(const MonomialIdeal& ideal);

/// Bounded verifier for the monomial-pair exchange condition: for all
/// monomials u, v in I with deg(u) <= deg(v) <= cap and u not dividing v, and
/// every i with deg_{x_i}(v) > deg_{x_i}(u), some j with
/// deg_{x_j}(v) < deg_{x_j}(u) has x_j * (v / x_i) in I.
///
/// This enumerates a finite slice of the infinite condition, so it is a
/// verifier rather than a decision procedure; the decision procedure is
/// is_componentwise_polymatroidal. Requires cap >= omega(I).
ExchangeCheck verify_exchange_condition_bounded(const MonomialIdeal& ideal,
                                                int cap);

/// Bounded verifier for the dual exchange property: for all monomials
/// u, v in I with deg(u) <= deg(v) and every i with
/// deg_{x_i}(v) < deg_{x_i}(u), some j with deg_{x_j}(v) > deg_{x_j}(u) has
/// x_i * (v / x_j) in I. Requires cap >= omega(I).
ExchangeCheck verify_dual_exchange_bounded(const MonomialIdeal& ideal,
                                           int cap);

/// Strong exchange: for all generators u, v, every i with
/// deg_{x_i}(u) > deg_{x_i}(v) and every j with deg_{x_j}(u) < deg_{x_j}(v),
/// x_j * (u / x_i) is a generator. Strictly stronger than the exchange
/// property. Input must be equigenerated.
ExchangeCheck has_strong_exchange(const MonomialIdeal& ideal);

}  // namespace lqshell
