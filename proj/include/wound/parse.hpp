#pragma once

#include <span>
#include <string>
#include <string_view>

#include "wound/ppoly.hpp"

namespace wound {

/// Parses a polynomial expression in the named variables over a tower level.
///
/// Grammar: sums and differences of products and quotients of factors; a
/// factor is an integer, a variable, the field generator, the F_q symbol
/// (e > 1), or a parenthesized expression, optionally raised to powers
/// `^n`, `^(-n)`, `^(p^e)`, `^(1/p^j)` or `^(-1/p^j)`. Division and
/// negative or fractional powers apply only to constants. Throws InputError.
Poly parse_poly(std::string_view text, const FieldPtr& field, std::span<const std::string> vars);

/// A field element (an expression without variables).
FieldElem parse_field_elem(std::string_view text, const FieldPtr& field);

/// An expression whose monomials all have the form c * X^(p^e).
PPoly parse_ppoly(std::string_view text, const FieldPtr& field, std::span<const std::string> vars);

/// As parse_ppoly, with coefficients polynomial in the parameter symbols.
ParamPPoly parse_param_ppoly(std::string_view text, const FieldPtr& field, std::span<const std::string> vars,
                             std::span<const std::string> params);

/// Identifier syntax: [A-Za-z_][A-Za-z0-9_]* followed by any number of '.
bool is_identifier(std::string_view s);

}  // namespace wound
