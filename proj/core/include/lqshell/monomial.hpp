#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lqshell {

/// Exponent of a single variable. Signed on purpose: arithmetic mistakes
/// surface as exceptions instead of wrapping around.
using Exp = int;

/// A monomial x^a in a fixed ambient ring K[x_1..x_n], stored as its exponent
/// vector. The coefficient field plays no computational role anywhere in this
/// library, so a monomial *is* its exponent vector.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exp> exponents);

  static Monomial one(int nvars);
  /// The variable x_{var+1}, i.e. the unit vector e_var (0-based).
  static Monomial variable(int nvars, int var);

  int nvars() const { return static_cast<int>(exp_.size()); }
  Exp operator[](int var) const { return exp_[static_cast<size_t>(var)]; }
  const std::vector<Exp>& exponents() const { return exp_; }

  /// Total degree |a| = a_1 + ... + a_n.
  int degree() const;
  bool is_one() const;

  /// The neighbouring monomial x_to * (this / x_from). Requires the exponent
  /// of x_from to be positive.
  Monomial exchange(int from, int to) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exp> exp_;
};

/// Canonical order used for every sorted output and every tie-break in the
/// library: at the first differing variable the larger exponent wins, so
/// monomials rich in early variables come first (x1^2 < x1*x2 < x2^2).
bool operator<(const Monomial& a, const Monomial& b);

/// Componentwise comparison: a[i] <= b[i] for all i, i.e. x^a | x^b.
bool divides(const Monomial& a, const Monomial& b);
/// Componentwise min / max (gcd and lcm of the monomials).
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// Product x^a * x^b, with overflow checking.
Monomial operator*(const Monomial& a, const Monomial& b);
/// Quotient a/b. Throws std::domain_error unless b divides a.
Monomial quotient(const Monomial& a, const Monomial& b);

/// All monomials of the given total degree, in canonical order. The result
/// has exactly C(nvars + degree - 1, degree) entries.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);
long long count_monomials_of_degree(int nvars, int degree);

/// Text grammar:  mono := "1" | factor ("*" factor)*
///                factor := "x" INT ("^" INT)?
/// Variable indices are 1-based in text. Whitespace is ignored. Repeated
/// variables accumulate. Throws std::invalid_argument on malformed input or
/// an index outside [1, nvars].
Monomial parse_monomial(std::string_view text, int nvars);

/// Inverse of parse_monomial on valid input: factors in increasing variable
/// index, exponent 1 left implicit, the empty product printed as "1".
std::string format_monomial(const Monomial& m);

}  // namespace lqshell
