#pragma once

#include <optional>
#include <vector>

#include "lqshell/monomial.hpp"

namespace lqshell {

/// Divisibility-minimal elements of a set of monomials: the antichain that
/// generates the same ideal. Duplicates collapse. Output in canonical order.
std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials);
/// Divisibility-maximal elements (facet extraction for multicomplexes).
std::vector<Monomial> maximal_elements(std::vector<Monomial> monomials);

/// A monomial ideal of K[x_1..x_n], held as its unique minimal generating
/// set, sorted canonically. The zero ideal has no generators; the unit ideal
/// is generated by 1.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  /// The zero ideal.
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}

  static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars); }
  static MonomialIdeal unit(int nvars);
  static MonomialIdeal principal(const Monomial& g);
  /// The irrelevant maximal ideal (x_1, ..., x_n).
  static MonomialIdeal maximal_ideal(int nvars);
  /// Minimalizes and sorts; any generating set is accepted.
  static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Monomial membership: some generator divides m.
  bool contains(const Monomial& m) const;

  /// The common degree of all generators, or nullopt when degrees are mixed
  /// or the ideal is zero. 0 for the unit ideal.
  std::optional<int> equigenerated_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Initial degree alpha(I) and top generator degree omega(I).
struct DegreeRange {
  int initial;
  int top;
};

/// Throws std::domain_error on the zero ideal.
DegreeRange degree_range(const MonomialIdeal& ideal);

/// The ideal generated by all degree-j monomials of I. Computed by padding
/// each generator of degree <= j up to degree j, then minimalizing. The
/// result is equigenerated in degree j (or zero when j < alpha(I)).
MonomialIdeal component(const MonomialIdeal& ideal, int degree);

/// Colon ideal I : x^v, generated by { g / gcd(g, x^v) : g in G(I) }.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v);
/// I : (x_1, ..., x_n), the intersection of the colons by each variable.
MonomialIdeal colon_by_maximal(const MonomialIdeal& ideal);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int k);
/// Intersection, via pairwise lcms of generators.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Sum, the minimalized union of the generating sets.
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// x^w * I.
MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& w);

/// Largest monomial x^w dividing every generator, and the ideal with that
/// factor removed, so that ideal == scale(stripped, factor). The stripped
/// generators have trivial gcd. Throws on the zero ideal.
struct CommonFactor {
  Monomial factor;
  MonomialIdeal stripped;
};
CommonFactor divide_out_common_factor(const MonomialIdeal& ideal);

/// 0-based indices of the variables that appear in some generator.
std::vector<int> support(const MonomialIdeal& ideal);

/// The same ideal rewritten over only its support variables.
/// variable_map[k] is the 0-based index in the original ring of the k-th
/// variable of the restricted ring.
struct SupportRestriction {
  std::vector<int> variable_map;
  MonomialIdeal ideal;
};
SupportRestriction restrict_to_support(const MonomialIdeal& ideal);

}  // namespace lqshell
