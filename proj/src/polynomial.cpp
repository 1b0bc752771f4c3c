#include "lieinv/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lieinv/errors.hpp"

namespace lieinv {

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = lieinv::total_degree(a);
  const auto db = lieinv::total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic, x0 most significant
}

namespace {

void check_universe(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::UniverseMismatch,
                "polynomials over " + std::to_string(a) + " and " + std::to_string(b) + " variables");
  }
}

Exponents zero_exponents(std::size_t n) { return Exponents(n, 0); }

std::string format_monomial(const Exponents& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t universe, const Scalar& c) {
  Polynomial p(universe);
  p.add_term(zero_exponents(universe), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t universe, std::size_t index) {
  if (index >= universe) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(index));
  Exponents e = zero_exponents(universe);
  e[index] = 1;
  Polynomial p(universe);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(Exponents exponents, const Scalar& c) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && lieinv::total_degree(terms_.begin()->first) == 0);
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(zero_exponents(universe_));
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : lieinv::total_degree(terms_.begin()->first);
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& exponents, const Scalar& c) {
  check_universe(universe_, exponents.size());
  if (sgn(c) == 0) return;
  Scalar value = c;
  value.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponents, value);
  if (inserted) return;
  it->second += value;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_universe(universe_, other.universe_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_universe(universe_, other.universe_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_universe(a.universe_, b.universe_);
  Polynomial out(a.universe_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(a.universe_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar& slot = out.terms_[e];
      slot += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(universe_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::differentiate(std::size_t var) const {
  if (var >= universe_) throw Error(ErrorCode::IndexOutOfRange, "derivative variable " + std::to_string(var));
  Polynomial out(universe_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != universe_) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, universe " +
                                                  std::to_string(universe_));
  }
  Scalar sum = 0;
  Scalar term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != 0) return true;
  }
  return false;
}

Polynomial Polynomial::remap(std::size_t new_universe, std::span<const std::size_t> mapping) const {
  if (mapping.size() != universe_) throw Error(ErrorCode::DimensionMismatch, "remap table size differs from universe");
  Polynomial out(new_universe);
  Exponents d(new_universe);
  for (const auto& [e, c] : terms_) {
    std::fill(d.begin(), d.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (mapping[i] == npos || mapping[i] >= new_universe) {
        throw Error(ErrorCode::UniverseMismatch, "variable " + std::to_string(i) + " has no image in target universe");
      }
      d[mapping[i]] += e[i];
    }
    out.add_term(d, c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != universe_) throw Error(ErrorCode::DimensionMismatch, "substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().universe();
  Polynomial out(target);
  std::vector<std::vector<Polynomial>> powers(universe_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
      term *= cache[e[i]];
    }
    out += term;
  }
  return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Scalar mag = abs(c);
    const std::string mono = format_monomial(e, names);
    if (mono.empty()) {
      out += format_scalar(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += format_scalar(mag) + "*" + mono;
    }
  }
  return out;
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const GrlexGreater greater;
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return greater(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b) {
  check_universe(a.universe(), b.universe());
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero polynomial");
  Polynomial quotient(a.universe());
  Polynomial rest = a;
  const Exponents& lb = b.leading_exponents();
  const Scalar& cb = b.leading_coefficient();
  Exponents shift(a.universe());
  while (!rest.is_zero()) {
    const Exponents& lr = rest.leading_exponents();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      shift[i] = lr[i] - lb[i];
    }
    const Polynomial t = Polynomial::monomial(shift, rest.leading_coefficient() / cb);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw Error(ErrorCode::NotDivisible, "polynomial division leaves a remainder");
  return std::move(*q);
}

// ---------------------------------------------------------------------------

RationalExpr::RationalExpr(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.universe(), 1)) {}

RationalExpr::RationalExpr(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  check_universe(num_.universe(), den_.universe());
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational expression with zero denominator");
  if (sgn(den_.leading_coefficient()) < 0) {
    num_ *= Scalar(-1);
    den_ *= Scalar(-1);
  }
}

bool RationalExpr::is_polynomial() const { return den_.is_constant(); }

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.den_ == b.den_) return RationalExpr(a.num_ + b.num_, a.den_);
  return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
  if (a.den_ == b.den_) return RationalExpr(a.num_ - b.num_, a.den_);
  return RationalExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.num_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero expression");
  return RationalExpr(a.num_ * b.den_, a.den_ * b.num_);
}

RationalExpr operator-(const RationalExpr& a) { return RationalExpr(-a.num_, a.den_); }

bool operator==(const RationalExpr& a, const RationalExpr& b) {
  if (a.universe() != b.universe()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalExpr RationalExpr::pow(int exponent) const {
  if (exponent >= 0) {
    return RationalExpr(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)));
  }
  if (num_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
  const auto e = static_cast<unsigned>(-exponent);
  return RationalExpr(den_.pow(e), num_.pow(e));
}

Scalar RationalExpr::evaluate(std::span<const Scalar> point) const {
  const Scalar d = den_.evaluate(point);
  if (sgn(d) == 0) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes at the point");
  return num_.evaluate(point) / d;
}

std::string RationalExpr::to_string(std::span<const std::string> names) const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

bool ratexpr_is_zero(const RationalExpr& f) { return f.is_zero(); }

// ---------------------------------------------------------------------------

PowerProduct::PowerProduct(std::size_t universe, std::vector<PowerFactor> factors) : universe_(universe) {
  for (auto& f : factors) {
    check_universe(universe_, f.base.universe());
    if (f.base.is_zero()) throw Error(ErrorCode::BadParameters, "power product with a zero base");
  }
  std::sort(factors.begin(), factors.end(),
            [](const PowerFactor& a, const PowerFactor& b) { return poly_less(a.base, b.base); });
  for (auto& f : factors) {
    if (!factors_.empty() && factors_.back().base == f.base) {
      factors_.back().exponent += f.exponent;
    } else {
      factors_.push_back(std::move(f));
    }
  }
  std::erase_if(factors_, [](const PowerFactor& f) {
    return sgn(f.exponent) == 0 || (f.base.is_constant() && f.base.constant_term() == 1);
  });
}

PowerProduct PowerProduct::from_rational(const RationalExpr& f) {
  std::vector<PowerFactor> factors;
  factors.push_back({f.numerator(), Scalar(1)});
  factors.push_back({f.denominator(), Scalar(-1)});
  return PowerProduct(f.universe(), std::move(factors));
}

bool PowerProduct::has_integer_exponents() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PowerFactor& f) { return is_integer(f.exponent); });
}

std::optional<RationalExpr> PowerProduct::as_rational() const {
  if (!has_integer_exponents()) return std::nullopt;
  Polynomial num = Polynomial::constant(universe_, 1);
  Polynomial den = Polynomial::constant(universe_, 1);
  for (const auto& f : factors_) {
    const long e = f.exponent.get_num().get_si();
    if (e > 0) {
      num *= f.base.pow(static_cast<unsigned>(e));
    } else {
      den *= f.base.pow(static_cast<unsigned>(-e));
    }
  }
  return RationalExpr(std::move(num), std::move(den));
}

PowerProduct PowerProduct::pow(const Scalar& exponent) const {
  std::vector<PowerFactor> factors = factors_;
  for (auto& f : factors) f.exponent *= exponent;
  return PowerProduct(universe_, std::move(factors));
}

PowerProduct operator*(const PowerProduct& a, const PowerProduct& b) {
  check_universe(a.universe_, b.universe_);
  std::vector<PowerFactor> factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return PowerProduct(a.universe_, std::move(factors));
}

std::string PowerProduct::to_string(std::span<const std::string> names) const {
  if (factors_.empty()) return "pow(1, 1)";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '*';
    out += "pow(" + f.base.to_string(names) + ", " + format_scalar(f.exponent) + ")";
  }
  return out;
}

std::size_t universe_of(const Function& f) {
  return std::visit([](const auto& v) { return v.universe(); }, f);
}

std::string to_string(const Function& f, std::span<const std::string> names) {
  return std::visit([&](const auto& v) { return v.to_string(names); }, f);
}

bool involves(const Function& f, std::size_t var) {
  if (const auto* r = std::get_if<RationalExpr>(&f)) {
    return r->numerator().involves(var) || r->denominator().involves(var);
  }
  for (const auto& factor : std::get<PowerProduct>(f).factors()) {
    if (factor.base.involves(var)) return true;
  }
  return false;
}

Function remap(const Function& f, std::size_t new_universe, std::span<const std::size_t> mapping) {
  if (const auto* r = std::get_if<RationalExpr>(&f)) {
    return RationalExpr(r->numerator().remap(new_universe, mapping), r->denominator().remap(new_universe, mapping));
  }
  std::vector<PowerFactor> factors;
  for (const auto& factor : std::get<PowerProduct>(f).factors()) {
    factors.push_back({factor.base.remap(new_universe, mapping), factor.exponent});
  }
  return PowerProduct(new_universe, std::move(factors));
}

}  // namespace lieinv
