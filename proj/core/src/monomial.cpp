#include "lqshell/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lqshell {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("monomials live in different rings: " +
                                std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()) + " variables");
}

Exp checked_add(Exp a, Exp b) {
  Exp out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("exponent overflow");
  return out;
}

}  // namespace

Monomial::Monomial(std::vector<Exp> exponents) : exp_(std::move(exponents)) {
  for (Exp e : exp_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::one(int nvars) {
  return Monomial(std::vector<Exp>(static_cast<size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars)
    throw std::invalid_argument("variable index out of range");
  std::vector<Exp> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(var)] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  long long d = 0;
  for (Exp e : exp_) d += e;
  if (d > std::numeric_limits<int>::max())
    throw std::overflow_error("degree overflow");
  return static_cast<int>(d);
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](Exp e) { return e == 0; });
}

Monomial Monomial::exchange(int from, int to) const {
  if (exp_[static_cast<size_t>(from)] < 1)
    throw std::domain_error("exchange from a variable with exponent 0");
  Monomial m = *this;
  m.exp_[static_cast<size_t>(from)] -= 1;
  m.exp_[static_cast<size_t>(to)] = checked_add(m.exp_[static_cast<size_t>(to)], 1);
  return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exp> e(static_cast<size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) e[static_cast<size_t>(i)] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exp> e(static_cast<size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) e[static_cast<size_t>(i)] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exp> e(static_cast<size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) e[static_cast<size_t>(i)] = checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exp> e(static_cast<size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) {
    if (b[i] > a[i])
      throw std::domain_error("not divisible: " + format_monomial(b) +
                              " does not divide " + format_monomial(a));
    e[static_cast<size_t>(i)] = a[i] - b[i];
  }
  return Monomial(std::move(e));
}

namespace {

// Recursive descent over the first variable's exponent, largest first, which
// is exactly the canonical order.
void enumerate(int nvars, int degree, std::vector<Exp>& prefix,
               std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == nvars - 1) {
    prefix.push_back(degree);
    out.push_back(Monomial(prefix));
    prefix.pop_back();
    return;
  }
  for (Exp e = degree; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(nvars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  if (nvars <= 0) {
    if (degree == 0) return {Monomial()};
    return {};
  }
  std::vector<Monomial> out;
  std::vector<Exp> prefix;
  prefix.reserve(static_cast<size_t>(nvars));
  enumerate(nvars, degree, prefix, out);
  return out;
}

long long count_monomials_of_degree(int nvars, int degree) {
  // C(nvars + degree - 1, degree)
  long long result = 1;
  for (long long i = 1; i <= degree; ++i)
    result = result * (nvars - 1 + i) / i;
  return result;
}

Monomial parse_monomial(std::string_view text, int nvars) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw std::invalid_argument("empty monomial");

  std::vector<Exp> e(static_cast<size_t>(nvars), 0);
  if (compact == "1") return Monomial(std::move(e));

  size_t pos = 0;
  auto read_int = [&]() -> long long {
    size_t start = pos;
    while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("expected a number in monomial '" +
                                  compact + "' at position " +
                                  std::to_string(start));
    const std::string digits = compact.substr(start, pos - start);
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      throw std::overflow_error("number out of range in monomial: " + digits);
    }
  };

  while (true) {
    if (pos >= compact.size() || compact[pos] != 'x')
      throw std::invalid_argument("expected 'x' in monomial '" + compact + "'");
    ++pos;
    long long index = read_int();
    if (index < 1 || index > nvars)
      throw std::invalid_argument("variable index " + std::to_string(index) +
                                  " out of range [1, " + std::to_string(nvars) +
                                  "]");
    long long exponent = 1;
    if (pos < compact.size() && compact[pos] == '^') {
      ++pos;
      exponent = read_int();
    }
    long long total = e[static_cast<size_t>(index - 1)] + exponent;
    if (total > std::numeric_limits<Exp>::max())
      throw std::overflow_error("exponent overflow in monomial");
    e[static_cast<size_t>(index - 1)] = static_cast<Exp>(total);
    if (pos == compact.size()) break;
    if (compact[pos] != '*')
      throw std::invalid_argument("expected '*' in monomial '" + compact + "'");
    ++pos;
  }
  return Monomial(std::move(e));
}

std::string format_monomial(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << '*';
    out << 'x' << (i + 1);
    if (m[i] > 1) out << '^' << m[i];
    first = false;
  }
  if (first) return "1";
  return out.str();
}

}  // namespace lqshell
