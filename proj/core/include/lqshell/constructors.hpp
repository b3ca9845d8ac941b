#pragma once

#include <utility>
#include <vector>

#include "lqshell/ideal.hpp"

namespace lqshell {

/// Ideal of Veronese type: all monomials of total degree d whose exponent
/// vector is bounded componentwise by `bound`. Zero when the bound cannot
/// reach degree d.
MonomialIdeal veronese_type(const std::vector<Exp>& bound, int degree);

/// Borel order on monomials of equal degree: writing each monomial as its
/// sorted multiset of variable indices, v precedes u when the k-th index of v
/// is <= the k-th index of u for every position k. Throws on a degree
/// mismatch.
bool borel_leq(const Monomial& v, const Monomial& u);

/// Principal Borel ideal B(u): all monomials of degree deg(u) that are
/// Borel-below u. Requires deg(u) >= 1.
MonomialIdeal principal_borel(const Monomial& u);

/// True when every component in [alpha, omega] is a principal Borel ideal and
/// the recovered Borel generators u_j satisfy the chain condition
/// u_j * x_n Borel-below u_{j+1}. The candidate generator of a component is
/// its unique Borel-maximal generator; no unique maximum means false.
bool is_componentwise_principal_borel(const MonomialIdeal& ideal);

/// P_A^k: all degree-k monomials in the variables indexed by `vars`
/// (0-based). The ideal P_A = (x_i : i in A) raised to the k-th power.
MonomialIdeal variable_power_ideal(int nvars, const std::vector<int>& vars,
                                   int k);

/// Intersection of powers of variable ideals, P_{A_1}^{k_1} cap ... cap
/// P_{A_t}^{k_t}. The intersection is componentwise polymatroidal whenever
/// A_i cup A_j = [n] for all i != j; `covering` reports whether that holds,
/// and `bad_pairs` lists the offending (i, j) when it does not. The ideal is
/// computed either way.
struct FatPointIdeal {
  MonomialIdeal ideal;
  bool covering = true;
  std::vector<std::pair<int, int>> bad_pairs;
};
FatPointIdeal fat_point_ideal(int nvars,
                              const std::vector<std::vector<int>>& sets,
                              const std::vector<int>& powers);

/// Sum of equigenerated ideals J_1 + ... + J_t with strictly increasing
/// degrees d_1 < ... < d_t. With `validate` set, checks that every J_i is
/// polymatroidal and that m^(d_{i+1} - d_i) * J_i is contained in J_{i+1};
/// under those conditions the sum is componentwise polymatroidal and its
/// components follow the three-case layer formula. Throws std::domain_error
/// when validation fails.
MonomialIdeal layered_sum(const std::vector<MonomialIdeal>& layers,
                          bool validate = true);

/// Socle of an ideal equigenerated in degree d >= 1: the degree-(d-1)
/// component of I : (x_1, ..., x_n). May be zero.
MonomialIdeal socle(const MonomialIdeal& ideal);

}  // namespace lqshell
