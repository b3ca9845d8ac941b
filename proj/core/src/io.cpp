#include "lqshell/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lqshell {

namespace {

using nlohmann::json;

json rows(const std::vector<Monomial>& monomials) {
  json out = json::array();
  for (const Monomial& m : monomials) out.push_back(m.exponents());
  return out;
}

Monomial row_to_monomial(const json& row, int nvars) {
  if (!row.is_array() || static_cast<int>(row.size()) != nvars)
    throw std::invalid_argument("exponent row has wrong length");
  std::vector<Exp> e;
  e.reserve(row.size());
  for (const json& entry : row) {
    if (!entry.is_number_integer())
      throw std::invalid_argument("exponent entries must be integers");
    long long value = entry.get<long long>();
    if (value < 0) throw std::invalid_argument("negative exponent");
    e.push_back(static_cast<Exp>(value));
  }
  return Monomial(std::move(e));
}

std::vector<Monomial> rows_to_monomials(const json& array, int nvars) {
  if (!array.is_array()) throw std::invalid_argument("expected an array");
  std::vector<Monomial> out;
  out.reserve(array.size());
  for (const json& row : array) out.push_back(row_to_monomial(row, nvars));
  return out;
}

json parse(std::string_view text) {
  json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) throw std::invalid_argument("malformed JSON");
  return value;
}

int read_nvars(const json& object) {
  if (!object.contains("n") || !object["n"].is_number_integer())
    throw std::invalid_argument("missing integer field \"n\"");
  int n = object["n"].get<int>();
  if (n < 0) throw std::invalid_argument("\"n\" must be nonnegative");
  return n;
}

std::string dump(const json& value, bool pretty) {
  return pretty ? value.dump(2) + "\n" : value.dump();
}

}  // namespace

std::string ideal_to_json(const MonomialIdeal& ideal, bool pretty) {
  json out;
  out["n"] = ideal.nvars();
  out["generators"] = rows(ideal.generators());
  return dump(out, pretty);
}

MonomialIdeal ideal_from_json(std::string_view text) {
  json value = parse(text);
  if (!value.is_object() || !value.contains("generators"))
    throw std::invalid_argument("ideal JSON needs \"n\" and \"generators\"");
  int n = read_nvars(value);
  return MonomialIdeal::from_generators(
      n, rows_to_monomials(value["generators"], n));
}

std::string ideal_to_text(const MonomialIdeal& ideal) {
  std::ostringstream out;
  for (const Monomial& g : ideal.generators()) out << format_monomial(g) << '\n';
  return out.str();
}

MonomialIdeal ideal_from_text(std::string_view text, std::optional<int> nvars) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty ideal text");

  int n = 0;
  if (nvars) {
    n = *nvars;
  } else {
    // Infer the ambient ring from the largest variable index mentioned.
    for (const std::string& l : lines)
      for (size_t i = 0; i + 1 < l.size(); ++i)
        if (l[i] == 'x' && std::isdigit(static_cast<unsigned char>(l[i + 1]))) {
          size_t end = i + 1;
          while (end < l.size() && std::isdigit(static_cast<unsigned char>(l[end])))
            ++end;
          const std::string digits = l.substr(i + 1, end - i - 1);
          try {
            n = std::max(n, std::stoi(digits));
          } catch (const std::out_of_range&) {
            throw std::invalid_argument("variable index out of range: x" + digits);
          }
        }
  }
  std::vector<Monomial> gens;
  gens.reserve(lines.size());
  for (const std::string& l : lines) gens.push_back(parse_monomial(l, n));
  return MonomialIdeal::from_generators(n, std::move(gens));
}

std::string multicomplex_to_json(const Multicomplex& mc, bool pretty) {
  json out;
  out["n"] = mc.nvars();
  out["facets"] = rows(mc.facets());
  return dump(out, pretty);
}

Multicomplex multicomplex_from_json(std::string_view text) {
  json value = parse(text);
  if (!value.is_object() || !value.contains("facets"))
    throw std::invalid_argument("multicomplex JSON needs \"n\" and \"facets\"");
  int n = read_nvars(value);
  return Multicomplex::from_facet_candidates(
      n, rows_to_monomials(value["facets"], n));
}

std::string witness_to_json(const ExchangeWitness& witness) {
  json out;
  out["u"] = witness.u.exponents();
  out["v"] = witness.v.exponents();
  out["i"] = witness.var;
  out["degree"] = witness.degree;
  return out.dump();
}

std::string order_to_json(const GeneratorOrder& order, bool pretty) {
  json out;
  out["order"] = rows(order.order);
  out["valid"] = order.certificate.valid;
  json steps = json::array();
  for (const ColonStep& step : order.certificate.steps) {
    json entry;
    entry["position"] = step.position;
    entry["colon_generators"] = rows(step.colon_generators);
    steps.push_back(std::move(entry));
  }
  out["certificate"] = std::move(steps);
  return dump(out, pretty);
}

std::vector<Monomial> order_from_json(std::string_view text, int nvars) {
  json value = parse(text);
  if (value.is_object()) {
    if (!value.contains("order"))
      throw std::invalid_argument("order JSON needs an \"order\" field");
    return rows_to_monomials(value["order"], nvars);
  }
  return rows_to_monomials(value, nvars);
}

InputKind detect_input_kind(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return InputKind::unknown;
  if (text[first] != '{') return InputKind::ideal;  // plain text ideal
  json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded() || !value.is_object()) return InputKind::unknown;
  if (value.contains("generators")) return InputKind::ideal;
  if (value.contains("facets")) return InputKind::multicomplex;
  return InputKind::unknown;
}

}  // namespace lqshell
