#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lqshell/ideal.hpp"
#include "lqshell/linear_quotients.hpp"
#include "lqshell/multicomplex.hpp"
#include "lqshell/polymatroid.hpp"

namespace lqshell {

// Wire formats. All JSON emission is deterministic (sorted keys, sorted
// generator lists), so equal values serialize to equal bytes.
//
//   ideal        {"n": <int>, "generators": [[<int>...], ...]}
//   multicomplex {"n": <int>, "facets": [[<int>...], ...]}
//   witness      {"u": [...], "v": [...], "i": <int>, "degree": <int>}
//   order        {"order": [[<int>...], ...], "valid": <bool>,
//                 "certificate": [{"position": <int>,
//                                  "colon_generators": [[<int>...]]}]}
//
// The plain-text ideal format is one monomial per line in the grammar of
// parse_monomial; blank lines are skipped. Readers minimalize on load.

std::string ideal_to_json(const MonomialIdeal& ideal, bool pretty = true);
MonomialIdeal ideal_from_json(std::string_view text);

std::string ideal_to_text(const MonomialIdeal& ideal);
/// When nvars is not given it is inferred as the largest variable index that
/// occurs. Throws std::invalid_argument on malformed or empty input.
MonomialIdeal ideal_from_text(std::string_view text,
                              std::optional<int> nvars = std::nullopt);

std::string multicomplex_to_json(const Multicomplex& mc, bool pretty = true);
Multicomplex multicomplex_from_json(std::string_view text);

std::string witness_to_json(const ExchangeWitness& witness);

std::string order_to_json(const GeneratorOrder& order, bool pretty = true);
/// Accepts either an order JSON object (only its "order" field is read) or a
/// bare JSON array of exponent rows.
std::vector<Monomial> order_from_json(std::string_view text, int nvars);

enum class InputKind { ideal, multicomplex, unknown };
/// Distinguishes the two JSON object formats by their field names; plain
/// text is reported as an ideal.
InputKind detect_input_kind(std::string_view text);

}  // namespace lqshell
