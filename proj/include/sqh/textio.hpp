#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sqh/ratexpr.hpp"

namespace sqh {

using json = nlohmann::json;

// Canonical text: sorted terms with explicit exponents; a fraction prints as
// "num/(den)" with both sides expanded. parse_ratexpr accepts any arithmetic
// expression in the same variable names, so the round trip is exact.
std::string to_text(const Poly& p);
std::string to_text(const RatExpr& x);
RatExpr parse_ratexpr(std::string_view text);

// {"num": [terms], "den": [terms]}, each term {"c": "p/q", "m": {"q1": -1, ...}}.
json to_json(const Poly& p);
json to_json(const RatExpr& x);
Poly poly_from_json(const json& j);
RatExpr ratexpr_from_json(const json& j);

// LaTeX using \hbar, \varepsilon_{i}, q_{i}, \chi_{i}, t_{i}; denominators
// are printed in factored form.
std::string to_latex(const Poly& p);
std::string to_latex(const RatExpr& x);

// Writes x as a sum over the monomials in the masked variables, each with its
// own reduced rational coefficient: "\chi_{1}\chi_{2} + \frac{...}{...}".
std::string to_latex_grouped(const RatExpr& x, const std::array<bool, kSlots>& mask);

}  // namespace sqh
