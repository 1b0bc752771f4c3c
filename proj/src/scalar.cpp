#include "lieinv/scalar.hpp"

#include <cctype>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  }
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Scalar value(canonical, 10);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(); }

bool is_integer(const Scalar& value) { return value.get_den() == 1; }

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace lieinv
