#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "waring/forms.hpp"

namespace waring {

/// Parses a homogeneous polynomial over the given variable names, e.g.
/// "x^6 + 3*x^5*y - y^6" with {"x", "y"}. Coefficients may be integers,
/// rationals p/q, decimals or parenthesized complex numbers. If any
/// coefficient is a decimal the whole form is floating.
MultiForm parse_form(std::string_view text, const std::vector<std::string>& vars);

/// Like parse_form but infers the variables: x,y -> 2 variables; x1..xn -> n;
/// Y0..YN -> N+1.
MultiForm parse_form_auto(std::string_view text);

/// Binary form in x and y.
BinaryForm parse_binary(std::string_view text);

/// Univariate polynomial in x (not necessarily homogeneous); returns
/// coefficients indexed by power of x.
std::vector<Scalar> parse_univariate(std::string_view text);

}  // namespace waring
