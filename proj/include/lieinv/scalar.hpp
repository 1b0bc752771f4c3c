#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lieinv {

// Exact rational, always kept canonical (gcd-reduced, positive denominator).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// Parses "p", "-p" or "p/q" (no decimals, no exponents). Throws
// Error(SyntaxError) on malformed input or zero denominator.
Scalar parse_scalar(std::string_view text);

std::string format_scalar(const Scalar& value);

bool is_integer(const Scalar& value);

Vector unit_vector(std::size_t dim, std::size_t index);
bool is_zero(const Vector& v);

}  // namespace lieinv
