#include "lieinv/coadjoint.hpp"

#include <map>

#include "lieinv/errors.hpp"

namespace lieinv {

VectorField::VectorField(std::size_t universe, std::vector<DerivationTerm> terms) : universe_(universe) {
  std::map<std::size_t, Polynomial> merged;
  for (auto& t : terms) {
    if (t.target >= universe) throw Error(ErrorCode::IndexOutOfRange, "derivation target " + std::to_string(t.target));
    if (t.coefficient.universe() != universe) throw Error(ErrorCode::UniverseMismatch, "derivation coefficient universe");
    auto [it, inserted] = merged.try_emplace(t.target, std::move(t.coefficient));
    if (!inserted) it->second += t.coefficient;
  }
  for (auto& [target, coeff] : merged) {
    if (!coeff.is_zero()) terms_.push_back({std::move(coeff), target});
  }
}

Polynomial VectorField::apply(const Polynomial& p) const {
  if (p.universe() != universe_) throw Error(ErrorCode::UniverseMismatch, "vector field applied across universes");
  Polynomial out(universe_);
  for (const auto& t : terms_) {
    if (!p.involves(t.target)) continue;
    out += t.coefficient * p.differentiate(t.target);
  }
  return out;
}

VectorField VectorField::negated() const {
  std::vector<DerivationTerm> terms = terms_;
  for (auto& t : terms) t.coefficient *= Scalar(-1);
  return VectorField(universe_, std::move(terms));
}

std::string VectorField::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coefficient.to_string(names) + ")*d/d" + names[t.target];
  }
  return out;
}

VectorField coadjoint_operator(const LieAlgebra& g, std::size_t i) {
  const std::size_t n = g.dim();
  if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "operator index " + std::to_string(i));
  std::vector<DerivationTerm> terms;
  for (std::size_t j = 0; j < n; ++j) {
    const SparseVector v = g.bracket_basis(i, j);
    if (v.empty()) continue;
    Polynomial coeff(n);
    for (const auto& [k, c] : v) coeff -= Polynomial::variable(n, k) * c;
    terms.push_back({std::move(coeff), j});
  }
  return VectorField(n, std::move(terms));
}

std::vector<VectorField> coadjoint_operators(const LieAlgebra& g) {
  std::vector<VectorField> ops;
  ops.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) ops.push_back(coadjoint_operator(g, i));
  return ops;
}

RationalExpr apply_vf(const VectorField& v, const RationalExpr& f) {
  const Polynomial& p = f.numerator();
  const Polynomial& q = f.denominator();
  const Polynomial vp = v.apply(p);
  if (q.is_constant()) return RationalExpr(vp, q);
  return RationalExpr(q * vp - p * v.apply(q), q * q);
}

Polynomial power_product_defect(const VectorField& v, const PowerProduct& f) {
  const auto& factors = f.factors();
  Polynomial total(f.universe());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Polynomial term = v.apply(factors[i].base);
    if (term.is_zero()) continue;
    term *= factors[i].exponent;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != i) term *= factors[j].base;
    }
    total += term;
  }
  return total;
}

namespace {

template <typename Residual>
Report invariance_report(const char* command, std::span<const VectorField> ops, std::span<const std::string> labels,
                         std::span<const std::string> names, Residual residual) {
  Report report;
  report.command = command;
  auto failures = nlohmann::ordered_json::array();
  std::string failing;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Polynomial r = residual(ops[i]);
    if (r.is_zero()) continue;
    const std::string label = i < labels.size() ? labels[i] : std::to_string(i);
    failures.push_back({{"operator", label}, {"residual", r.to_string(names)}});
    failing += (failing.empty() ? "" : ", ") + label;
  }
  const bool ok = failures.empty();
  report.add("invariant", ok, ok ? "annihilated by all " + std::to_string(ops.size()) + " operators"
                                 : "nonzero residual under " + failing);
  report.data["residuals"] = std::move(failures);
  return report;
}

std::vector<std::string> hat_labels(const LieAlgebra& g) {
  std::vector<std::string> labels;
  for (const auto& b : g.basis()) labels.push_back(b + "^");
  return labels;
}

}  // namespace

Report is_invariant_rational(std::span<const VectorField> ops, std::span<const std::string> labels,
                             std::span<const std::string> names, const RationalExpr& f) {
  for (const auto& op : ops) {
    if (op.universe() != f.universe()) throw Error(ErrorCode::UniverseMismatch, "function universe differs from algebra");
  }
  return invariance_report("is_invariant_rational", ops, labels, names,
                           [&](const VectorField& v) { return apply_vf(v, f).numerator(); });
}

Report is_invariant_power_product(std::span<const VectorField> ops, std::span<const std::string> labels,
                                  std::span<const std::string> names, const PowerProduct& f) {
  for (const auto& op : ops) {
    if (op.universe() != f.universe()) throw Error(ErrorCode::UniverseMismatch, "function universe differs from algebra");
  }
  return invariance_report("is_invariant_power_product", ops, labels, names,
                           [&](const VectorField& v) { return power_product_defect(v, f); });
}

Report is_invariant_rational(const LieAlgebra& g, const RationalExpr& f) {
  const auto ops = coadjoint_operators(g);
  return is_invariant_rational(ops, hat_labels(g), g.variable_names(), f);
}

Report is_invariant_power_product(const LieAlgebra& g, const PowerProduct& f) {
  const auto ops = coadjoint_operators(g);
  return is_invariant_power_product(ops, hat_labels(g), g.variable_names(), f);
}

Report is_invariant(const LieAlgebra& g, const Function& f) {
  if (const auto* r = std::get_if<RationalExpr>(&f)) return is_invariant_rational(g, *r);
  return is_invariant_power_product(g, std::get<PowerProduct>(f));
}

}  // namespace lieinv
