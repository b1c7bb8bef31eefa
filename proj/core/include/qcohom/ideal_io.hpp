#ifndef QCOHOM_IDEAL_IO_HPP
#define QCOHOM_IDEAL_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "qcohom/groebner.hpp"

namespace qcohom::io {

/// An ideal read from a file. Q coefficients when the file fixes q to a
/// rational, Q(q) coefficients in q-generic mode.
struct ParsedIdeal {
    RingPtr ring;
    std::variant<Ideal<Rational>, Ideal<RatFunc>> ideal;
};

/// Parses
///   {"variables": [...],
///    "field": {"mode": "q-rational", "q": "-1"} | {"mode": "q-generic"},
///    "polynomials": [[["p/q", [e1, e2, ...]], ...], ...]}
/// In q-generic mode a coefficient may be any rational expression in q.
/// Throws ParseError on malformed input and ConfigError for q = 0.
ParsedIdeal parse_ideal_json(std::string_view text, const MonomialOrder &order = MonomialOrder::grevlex());
ParsedIdeal read_ideal_file(const std::string &path, const MonomialOrder &order = MonomialOrder::grevlex());

/// "lex" or "grevlex"; throws ConfigError otherwise.
MonomialOrder parse_order(const std::string &name);

/// Reduced basis of the parsed ideal in the ring's order as a JSON
/// document with keys "variables", "field", "order", "basis" (same
/// polynomial encoding as the input), "quotient_dim" (null when the
/// ideal is not zero-dimensional). Throws EmptyGeneratorList.
std::string groebner_json(const ParsedIdeal &input);

} // namespace qcohom::io

#endif
