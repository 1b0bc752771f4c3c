#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lieinv/scalar.hpp"

namespace lieinv {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

// Graded lexicographic order, x0 > x1 > ... within a degree.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q in a fixed universe of variables.
// Terms iterate in descending grlex order; no zero coefficients are stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t universe) : universe_(universe) {}

  static Polynomial constant(std::size_t universe, const Scalar& c);
  static Polynomial variable(std::size_t universe, std::size_t index);
  static Polynomial monomial(Exponents exponents, const Scalar& c);

  std::size_t universe() const noexcept { return universe_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  // Constant term, zero if absent.
  Scalar constant_term() const;
  std::uint32_t total_degree() const;
  const Exponents& leading_exponents() const;
  const Scalar& leading_coefficient() const;

  void add_term(const Exponents& exponents, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.universe_ == b.universe_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;
  Polynomial differentiate(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  bool involves(std::size_t var) const;

  // Moves variable i to mapping[i] in a universe of the given size. Entries
  // equal to npos mark variables that must not occur.
  Polynomial remap(std::size_t new_universe, std::span<const std::size_t> mapping) const;
  // Replaces variable i by images[i] (all images share one universe).
  Polynomial substitute(std::span<const Polynomial> images) const;

  std::string to_string(std::span<const std::string> names) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t universe_ = 0;
  TermMap terms_;
};

// Total order used to canonicalize collections of polynomials.
bool poly_less(const Polynomial& a, const Polynomial& b);

// Exact quotient when b divides a; std::nullopt otherwise.
std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b);
// Throws NotDivisible.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// P/Q with Q != 0. The leading coefficient of Q is positive; no gcd
// reduction is performed, equality is by cross-multiplication.
class RationalExpr {
 public:
  RationalExpr() = default;
  explicit RationalExpr(Polynomial numerator);
  RationalExpr(Polynomial numerator, Polynomial denominator);  // throws ZeroDenominator

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  std::size_t universe() const noexcept { return num_.universe(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const;

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a);
  friend bool operator==(const RationalExpr& a, const RationalExpr& b);

  RationalExpr pow(int exponent) const;
  Scalar evaluate(std::span<const Scalar> point) const;  // throws ZeroDenominator

  std::string to_string(std::span<const std::string> names) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

bool ratexpr_is_zero(const RationalExpr& f);

struct PowerFactor {
  Polynomial base;
  Scalar exponent;

  friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

// prod_i base_i^exponent_i with rational exponents. Factors are merged by
// identical base, zero exponents dropped, and sorted by poly_less.
class PowerProduct {
 public:
  PowerProduct() = default;
  explicit PowerProduct(std::size_t universe) : universe_(universe) {}
  PowerProduct(std::size_t universe, std::vector<PowerFactor> factors);

  static PowerProduct from_rational(const RationalExpr& f);

  std::size_t universe() const noexcept { return universe_; }
  const std::vector<PowerFactor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  bool has_integer_exponents() const;
  // Defined when all exponents are integers.
  std::optional<RationalExpr> as_rational() const;

  PowerProduct pow(const Scalar& exponent) const;
  friend PowerProduct operator*(const PowerProduct& a, const PowerProduct& b);
  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t universe_ = 0;
  std::vector<PowerFactor> factors_;
};

// A candidate invariant: either a rational expression or a power product.
using Function = std::variant<RationalExpr, PowerProduct>;

std::size_t universe_of(const Function& f);
std::string to_string(const Function& f, std::span<const std::string> names);
// Whether any numerator/denominator/base involves the variable.
bool involves(const Function& f, std::size_t var);
// Same contract as Polynomial::remap, applied to every polynomial inside.
Function remap(const Function& f, std::size_t new_universe, std::span<const std::size_t> mapping);

}  // namespace lieinv
