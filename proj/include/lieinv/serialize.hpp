#pragma once

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lieinv/algebra.hpp"
#include "lieinv/polynomial.hpp"
#include "lieinv/report.hpp"

namespace lieinv {

using Json = nlohmann::ordered_json;

// {"name", "dim", "basis", "brackets": [{"i","j","k","c"}], "split"?} with
// brackets in (i, j, k) order and coefficients as "p/q" strings.
Json algebra_to_json(const LieAlgebra& g);
// Throws InvalidJson for schema errors (plus the algebra constructor errors).
LieAlgebra algebra_from_json(const Json& j);

std::string save_algebra(const LieAlgebra& g);  // two-space indent, trailing newline
LieAlgebra load_algebra(std::string_view text);

// FNV-1a 64 over the compact algebra JSON, as 16 hex digits.
std::string content_hash(const LieAlgebra& g);
AlgebraFingerprint fingerprint(const LieAlgebra& g);

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);  // throws InvalidJson

std::string render_json(const Report& r);
std::string render_text(const Report& r);
std::string render_latex(const Report& r);

// Fraction-style LaTeX for an invariant, e.g. \frac{y_{1} y_{2} + x_{3} v_{3}}{x_{3}}.
std::string polynomial_to_latex(const Polynomial& p, std::span<const std::string> names);
std::string function_to_latex(const Function& f, std::span<const std::string> names);

}  // namespace lieinv
