#pragma once

#include <map>
#include <vector>

#include "lqshell/ideal.hpp"

namespace lqshell {

/// Minimal generators of the colon ideal (u_1, ..., u_{pos-1}) : u_pos.
/// Positions are 1-based; entries exist for positions 2..m.
struct ColonStep {
  int position = 0;
  std::vector<Monomial> colon_generators;
};

/// Verification record for a claimed linear-quotients order. When valid,
/// every colon generator in every step has degree exactly 1. When invalid,
/// `steps` ends with the failing position, whose colon generators expose a
/// generator of degree >= 2.
struct OrderCertificate {
  bool valid = false;
  int failed_position = 0;  // 0 when valid
  std::vector<ColonStep> steps;
};

/// Checks that each prefix colon (u_1,...,u_{j-1}) : u_j is generated by
/// variables. `order` must be a permutation of the minimal generators
/// (throws std::invalid_argument otherwise).
OrderCertificate verify_linear_quotients(const MonomialIdeal& ideal,
                                         const std::vector<Monomial>& order);

/// Decomposition I = x_v * I_1 + I_2 where x_v * I_1 collects the generators
/// divisible by x_v (returned with one copy of x_v stripped) and I_2 the
/// rest. `var` is 0-based and must divide at least one generator. When I is
/// componentwise polymatroidal, I_2 is contained in I_1 and both parts are
/// componentwise polymatroidal again.
struct Split {
  MonomialIdeal stripped_part;  // I_1
  MonomialIdeal complement;     // I_2
  int var = 0;
};
Split split(const MonomialIdeal& ideal, int var);

/// The synthesis recursion, with no validation of the input:
///   1. with <= 1 generator the order is trivial;
///   2. divide out the common factor of the generators;
///   3. pick the smallest variable dividing a generator of least degree;
///   4. split at that variable;
///   5. recurse on both parts;
///   6. concatenate the x_v-block before the complement block, restoring
///      the stripped factors.
/// For componentwise polymatroidal input the result is always a
/// linear-quotients order. All choices are deterministic, so equal inputs
/// give byte-equal orders.
std::vector<Monomial> synthesize_order(const MonomialIdeal& ideal);

struct GeneratorOrder {
  std::vector<Monomial> order;
  OrderCertificate certificate;
};

/// Runs the synthesis recursion and verifies the result. In checked mode the
/// input is first validated with is_componentwise_polymatroidal; a failure
/// throws std::domain_error carrying the formatted witness. Unchecked mode
/// skips validation (cheaper; the caller asserts the property) and the
/// returned certificate records whether the order happened to verify.
GeneratorOrder synthesize_lq_order(const MonomialIdeal& ideal,
                                   bool checked = true);

enum class SearchStatus {
  found,             // a valid order was produced
  none_exists,       // search space exhausted: no linear-quotients order
  budget_exhausted,  // inconclusive
};

struct SearchResult {
  SearchStatus status = SearchStatus::none_exists;
  std::vector<Monomial> order;  // filled when status == found
  long long nodes = 0;          // prefix extensions attempted
};

/// Backtracking over order prefixes: a generator may extend a prefix exactly
/// when the prefix colon against it is generated by variables. Candidates are
/// tried in canonical order, so results are deterministic. Complete up to
/// `budget` prefix extensions; none_exists is only reported when the whole
/// space was covered, so it certifies that no linear-quotients order exists.
SearchResult search_lq_order(const MonomialIdeal& ideal,
                             long long budget = 1'000'000);

/// Runs search_lq_order on every component in [alpha, omega], plus a spot
/// check at omega + 1 (higher components inherit the property as products
/// with powers of the maximal ideal, which this tool checks but cannot
/// prove).
struct ComponentwiseLq {
  std::map<int, SearchStatus> per_degree;
  bool all_found() const;
  bool any_infeasible() const;
};
ComponentwiseLq has_componentwise_linear_quotients(
    const MonomialIdeal& ideal, long long budget = 1'000'000);

}  // namespace lqshell
