#include "lieinv/expr.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

struct Value {
  std::optional<PowerProduct> pp;  // engaged once pow(...) has been seen
  RationalExpr rational;
};

class Parser {
 public:
  Parser(std::string_view src, std::span<const std::string> names) : src_(src), names_(names) {}

  Function run() {
    Value v = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    if (v.pp) return *v.pp;
    return v.rational;
  }

 private:
  std::size_t universe() const { return names_.size(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Value constant(const Scalar& c) const { return {std::nullopt, RationalExpr(Polynomial::constant(universe(), c))}; }

  PowerProduct as_power_product(const Value& v) const {
    if (v.pp) return *v.pp;
    if (v.rational.is_zero()) throw Error(ErrorCode::BadParameters, "zero factor in a power product");
    return PowerProduct::from_rational(v.rational);
  }

  Value multiply(const Value& a, const Value& b) const {
    if (a.pp || b.pp) return {as_power_product(a) * as_power_product(b), {}};
    return {std::nullopt, a.rational * b.rational};
  }

  Value divide(const Value& a, const Value& b) const {
    if (a.pp || b.pp) return {as_power_product(a) * as_power_product(b).pow(Scalar(-1)), {}};
    return {std::nullopt, a.rational / b.rational};
  }

  Value expr() {
    Value acc = term();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('+') && !accept('-')) return acc;
      const bool minus = src_[at] == '-';
      Value rhs = term();
      if (acc.pp || rhs.pp) {
        throw Error(ErrorCode::MixedForm, "pow(...) cannot appear under '+' or '-' (position " + std::to_string(at) + ")",
                    at);
      }
      acc.rational = minus ? acc.rational - rhs.rational : acc.rational + rhs.rational;
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      if (accept('*')) {
        acc = multiply(acc, unary());
      } else if (accept('/')) {
        acc = divide(acc, unary());
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept('-')) return multiply(constant(Scalar(-1)), unary());
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const mpz_class e = integer();
    if (!e.fits_sint_p()) fail("exponent too large");
    const long n = negative ? -e.get_si() : e.get_si();
    if (base.pp) return {base.pp->pow(Scalar(n)), {}};
    return {std::nullopt, base.rational.pow(static_cast<int>(n))};
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Scalar rational_literal() {
    const bool negative = accept('-');
    Scalar value(integer());
    if (accept('/')) {
      const mpz_class den = integer();
      if (den == 0) fail("zero denominator in exponent");
      value /= Scalar(den);
    }
    return negative ? Scalar(-value) : value;
  }

  Value primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Scalar(integer()));
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string ident(src_.substr(start, pos_ - start));
      if (ident == "pow") {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == '(') {
          ++pos_;
          Value base = expr();
          expect(',');
          const Scalar e = rational_literal();
          expect(')');
          return {as_power_product(base).pow(e), {}};
        }
      }
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == ident) return {std::nullopt, RationalExpr(Polynomial::variable(universe(), i))};
      }
      throw Error(ErrorCode::UnknownVariable, "unknown variable '" + ident + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Function parse_expr(std::string_view src, std::span<const std::string> names) { return Parser(src, names).run(); }

}  // namespace lieinv
