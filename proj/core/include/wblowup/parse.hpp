#ifndef WBLOWUP_PARSE_HPP
#define WBLOWUP_PARSE_HPP

#include "wblowup/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wblowup {

/// Parses the polynomial grammar
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ('^' positive-integer)?
///   primary := integer ('/' integer)? | identifier | '(' expr ')'
///
/// Identifiers are [A-Za-z_][A-Za-z0-9_']* and must name a variable of `vars`.
/// Whitespace is insignificant. Throws ParseError naming the offending text.
Polynomial parse_polynomial(std::string_view text, const Variables& vars);

/// Splits a comma- or semicolon-separated list, trimming whitespace and
/// dropping empty entries.
std::vector<std::string> split_list(std::string_view text);

/// Parses "a,b,c" into rationals ("1/2" allowed).
std::vector<Rational> parse_point(std::string_view text);

}  // namespace wblowup

#endif  // WBLOWUP_PARSE_HPP
