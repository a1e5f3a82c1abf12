#pragma once

#include <string>
#include <string_view>

#include "deltacompat/ratfunc.hpp"

namespace deltacompat {

/// Parses integers, declared variable names, unary minus, + - * /, ^ with an
/// integer exponent (negative allowed) and parentheses. Precedence from
/// tight to loose: ^ (right associative), unary minus, * /, + -.
/// Errors are ParseError with 1-based line and column; `line` and
/// `column` give the position of text[0] inside a larger document.
RatFunc parse_expression(std::string_view text, const ContextPtr& ctx, std::size_t line = 1,
                         std::size_t column = 1);

/// Expanded canonical form under the context ordering, e.g. "4*x^2+10*x+6".
/// Inside a term variables appear from lowest to highest priority.
std::string to_string(const MultiPoly& p);
/// "num" when the denominator is 1, otherwise "(num)/(den)" (parentheses
/// dropped around single-term parts). parse_expression reads it back.
std::string to_string(const RatFunc& f);

}  // namespace deltacompat
