#ifndef RIORDAN_SERIES_EXPR_HPP
#define RIORDAN_SERIES_EXPR_HPP

#include <string>

#include "riordan/power_series.hpp"

namespace riordan {

/// Parses a series expression at the given truncation order.
///
/// Grammar (whitespace ignored):
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := unary ('^' integer)?
///   unary   := '-' unary | primary
///   primary := integer | 'x' | func '(' expr (',' expr)* ')' | '(' expr ')'
///   func    := revert | sqrt | exp | log | compose | deriv | integral | aerate
///
/// compose takes two arguments; every other function takes one. ParseError
/// messages carry the offending position.
PowerSeries parse_series(const std::string& text, std::size_t order);

}  // namespace riordan

#endif
