#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invsys/poly.hpp"

namespace invsys {

// Expressions over + - * ^, integer literals, parentheses and variables.
// A variable is one letter followed by optional digits, so "x1x2" and "YZ"
// are products of two variables. Juxtaposition multiplies; exponents are
// nonnegative integer literals. A leading sign is accepted.
struct ParsedPolynomial {
  Polynomial poly;
  std::vector<std::string> variables;
};

// Variables appear in first-appearance order unless `vars` pins the order,
// in which case any other name raises UnknownVariable. Throws SyntaxError
// (with a byte offset) and NegativeExponent.
ParsedPolynomial parse_polynomial(std::string_view src, const FieldSpec& field = FieldSpec::rationals(),
                                  const std::optional<std::vector<std::string>>& vars = std::nullopt);

struct ParsedIdeal {
  std::vector<Polynomial> generators;
  std::vector<std::string> variables;
};

// Semicolon-separated expressions sharing one variable list.
ParsedIdeal parse_ideal(std::string_view src, const FieldSpec& field = FieldSpec::rationals(),
                        const std::optional<std::vector<std::string>>& vars = std::nullopt);

// Splits "x,y,z" or "x y z" into names; each must be a valid variable token.
std::vector<std::string> parse_variable_list(std::string_view src);

}  // namespace invsys
