#pragma once

#include "e6cs/characters.hpp"
#include "e6cs/polynomial.hpp"
#include "e6cs/tensor.hpp"

#include <string>
#include <string_view>

namespace e6cs {

/// [{"exp":[6 ints],"coef":"p/q"},...] in graded-lex order.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(std::string_view text);

/// {"weight":[6],"terms":[...],"method":"...","version":N}, one line.
std::string character_to_json(const Character& c);
/// Throws ParseError on malformed input or non-integer coefficients.
Character character_from_json(std::string_view text);

/// {"factors":[[6],...],"terms":[{"weight":[6],"mult":N},...]}, one line.
std::string series_to_json(const CGSeries& s);
CGSeries series_from_json(std::string_view text);

}  // namespace e6cs
