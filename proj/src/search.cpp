#include "lieinv/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "lieinv/counting.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/linalg.hpp"
#include "lieinv/structure.hpp"

namespace lieinv {

namespace {

// Nullspace of N -> (v_i(N) - sigma_i N)_i restricted to the given columns.
std::vector<Vector> operator_kernel(std::span<const VectorField> ops, std::span<const Polynomial> sigma,
                                    const std::vector<Exponents>& columns) {
  std::map<std::pair<std::size_t, Exponents>, SparseEliminator::Row> rows;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Polynomial m = Polynomial::monomial(columns[c], 1);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      Polynomial image = ops[i].apply(m);
      if (!sigma.empty() && !sigma[i].is_zero()) image -= sigma[i] * m;
      for (const auto& [e, coeff] : image.terms()) rows[{i, e}][c] += coeff;
    }
  }
  SparseEliminator elim(columns.size());
  for (auto& [key, row] : rows) {
    std::erase_if(row, [](const auto& kv) { return sgn(kv.second) == 0; });
    if (!row.empty()) elim.add_row(std::move(row));
  }
  return elim.nullspace();
}

Polynomial combine_columns(const std::vector<Exponents>& columns, const Vector& coefficients, std::size_t universe) {
  Polynomial p(universe);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (sgn(coefficients[c]) != 0) p.add_term(columns[c], coefficients[c]);
  }
  return p;
}

Vector monomial_weight(const Exponents& e, const WeightTable& table) {
  Vector w(table.torus.size());
  for (std::size_t b = 0; b < e.size(); ++b) {
    if (e[b] == 0) continue;
    for (std::size_t t = 0; t < w.size(); ++t) w[t] += Scalar(e[b]) * table.weights[b][t];
  }
  return w;
}

// Scales to coprime integers, keeping the sign.
Vector coprime_integer(Vector v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) l = lcm(l, mpz_class(x.get_den()));
  }
  mpz_class g = 0;
  for (auto& x : v) {
    x *= Scalar(l);
    g = gcd(g, mpz_class(x.get_num()));
  }
  if (g > 1) {
    for (auto& x : v) x /= Scalar(g);
  }
  return v;
}

bool parallel(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  std::size_t p = 0;
  while (sgn(b[p]) == 0) ++p;
  const Scalar ratio = a[p] / b[p];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != ratio * b[i]) return false;
  }
  return true;
}

}  // namespace

AnsatzSpace AnsatzSpace::make(std::size_t universe, unsigned min_degree, unsigned max_degree) {
  AnsatzSpace a{universe, min_degree, max_degree, {}};
  for (unsigned d = min_degree; d <= max_degree; ++d) {
    std::vector<Exponents> level;
    Exponents e(universe, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
      if (var + 1 == universe) {
        e[var] = left;
        level.push_back(e);
        e[var] = 0;
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[var] = k;
        rec(var + 1, left - k);
      }
      e[var] = 0;
    };
    if (universe == 0) {
      if (d == 0) level.push_back(e);
    } else {
      rec(0, d);
    }
    std::sort(level.begin(), level.end(), GrlexGreater{});
    a.monomials.insert(a.monomials.end(), level.begin(), level.end());
  }
  return a;
}

Polynomial AnsatzSpace::combine(const Vector& coefficients) const {
  return combine_columns(monomials, coefficients, universe);
}

std::vector<Polynomial> polynomial_invariants(std::span<const VectorField> ops, std::size_t universe, unsigned d) {
  const AnsatzSpace ansatz = AnsatzSpace::make(universe, 1, d);
  std::vector<Polynomial> out;
  for (const auto& v : operator_kernel(ops, {}, ansatz.monomials)) out.push_back(ansatz.combine(v));
  return out;
}

std::vector<Polynomial> polynomial_invariants(const LieAlgebra& g, unsigned d) {
  const auto ops = coadjoint_operators(g);
  return polynomial_invariants(ops, g.dim(), d);
}

std::vector<SemiInvariant> semi_invariants(const LieAlgebra& g, unsigned d) {
  const WeightTable table = verify_torus(g);
  const auto all_ops = coadjoint_operators(g);
  std::vector<VectorField> nil_ops;
  for (auto i : table.nilradical) nil_ops.push_back(all_ops[i]);

  const AnsatzSpace ansatz = AnsatzSpace::make(g.dim(), 1, d);
  std::vector<Vector> order;
  std::map<Vector, std::vector<Exponents>> classes;
  for (const auto& e : ansatz.monomials) {
    Vector w = monomial_weight(e, table);
    auto [it, inserted] = classes.try_emplace(w);
    if (inserted) order.push_back(w);
    it->second.push_back(e);
  }
  std::vector<SemiInvariant> out;
  for (const auto& w : order) {
    const auto& columns = classes.at(w);
    for (const auto& v : operator_kernel(nil_ops, {}, columns)) {
      out.push_back({combine_columns(columns, v, g.dim()), w});
    }
  }
  return out;
}

std::vector<PowerProduct> power_product_combine(std::span<const SemiInvariant> semis) {
  if (semis.empty()) return {};
  const std::size_t p = semis.front().weight.size();
  const std::size_t universe = semis.front().poly.universe();
  Matrix w(p, semis.size());
  for (std::size_t i = 0; i < semis.size(); ++i) {
    if (semis[i].weight.size() != p) throw Error(ErrorCode::DimensionMismatch, "semi-invariant weights differ in length");
    for (std::size_t t = 0; t < p; ++t) w(t, i) = semis[i].weight[t];
  }
  std::vector<PowerProduct> out;
  for (const auto& e : nullspace(w)) {
    const Vector scaled = coprime_integer(e);
    std::vector<PowerFactor> factors;
    for (std::size_t i = 0; i < semis.size(); ++i) {
      if (sgn(scaled[i]) != 0) factors.push_back({semis[i].poly, scaled[i]});
    }
    out.emplace_back(universe, std::move(factors));
  }
  return out;
}

std::vector<RationalExpr> rational_search_fixed_denominator(const LieAlgebra& g, const PowerProduct& denominator,
                                                            unsigned d) {
  const std::size_t n = g.dim();
  if (denominator.universe() != n) throw Error(ErrorCode::UniverseMismatch, "denominator universe differs from algebra");
  if (!denominator.has_integer_exponents()) {
    throw Error(ErrorCode::BadParameters, "denominator must have integer exponents");
  }
  const auto ops = coadjoint_operators(g);
  // F = N / D, so v(F) = 0 iff v(N) = N * v(D)/D with v(D)/D = sum e_i sigma_i.
  std::vector<Polynomial> sigma(ops.size(), Polynomial(n));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (const auto& f : denominator.factors()) {
      const Polynomial image = ops[i].apply(f.base);
      if (image.is_zero()) continue;
      auto q = try_divide_exact(image, f.base);
      if (!q) {
        throw Error(ErrorCode::DenominatorNotSemiInvariant,
                    "operator " + g.basis()[i] + "^ does not rescale " + f.base.to_string(g.variable_names()));
      }
      sigma[i] += *q * f.exponent;
    }
  }
  const AnsatzSpace ansatz = AnsatzSpace::make(n, 0, d);
  const auto kernel = operator_kernel(ops, sigma, ansatz.monomials);
  const RationalExpr dexpr = *denominator.as_rational();

  // Drop the direction N = D (constant F), when it lies in the ansatz.
  std::map<Exponents, std::size_t> index;
  for (std::size_t c = 0; c < ansatz.dim(); ++c) index[ansatz.monomials[c]] = c;
  SparseEliminator seen(ansatz.dim());
  if (dexpr.denominator().is_constant()) {
    SparseEliminator::Row trivial;
    bool fits = true;
    for (const auto& [e, c] : dexpr.numerator().terms()) {
      auto it = index.find(e);
      if (it == index.end()) {
        fits = false;
        break;
      }
      trivial[it->second] = c / dexpr.denominator().constant_term();
    }
    if (fits) seen.add_row(std::move(trivial));
  }
  std::vector<RationalExpr> out;
  for (const auto& v : kernel) {
    SparseEliminator::Row row;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (sgn(v[c]) != 0) row[c] = v[c];
    }
    if (!seen.add_row(std::move(row))) continue;
    out.push_back(RationalExpr(ansatz.combine(v)) / dexpr);
  }
  return out;
}

FundamentalSetResult fundamental_set_search(const LieAlgebra& g, const SearchBudget& budget) {
  FundamentalSetResult result;
  result.target = invariant_count(g);
  result.report.command = "search";
  const auto names = g.variable_names();
  auto found = nlohmann::ordered_json::array();
  std::size_t rejected = 0;
  std::size_t rank = 0;

  auto offer = [&](const Function& f, const std::string& stage, unsigned degree) {
    if (rank >= result.target) return;
    if (!is_invariant(g, f).passed()) {
      ++rejected;
      return;
    }
    std::vector<Function> trial = result.functions;
    trial.push_back(f);
    const std::size_t r = functional_independence(g, trial);
    if (r <= rank) return;
    rank = r;
    result.functions.push_back(f);
    found.push_back({{"expr", to_string(f, names)}, {"stage", stage}, {"degree", degree}});
  };

  std::optional<WeightTable> table;
  std::vector<Vector> center_weights;
  if (g.split()) {
    table = verify_torus(g);
    const LieAlgebra nil = nilradical_of(g);
    const Subspace z = center(nil);
    for (const auto& c : z.basis()) {
      for (std::size_t p = 0; p < c.size(); ++p) {
        if (sgn(c[p]) == 0) continue;
        const Vector& w = table->weights[g.split()->nilradical[p]];
        if (!is_zero(w) && std::find(center_weights.begin(), center_weights.end(), w) == center_weights.end()) {
          center_weights.push_back(w);
        }
      }
    }
  }

  std::vector<SemiInvariant> semis;
  std::vector<Function> semi_functions;
  std::size_t semi_rank = 0;
  std::vector<PowerProduct> denominators = budget.extra_denominators;

  for (unsigned d = 1; d <= budget.max_degree && rank < result.target; ++d) {
    for (const auto& p : polynomial_invariants(g, d)) offer(RationalExpr(p), "polynomial", d);
    if (rank >= result.target) break;

    if (table) {
      for (const auto& s : semi_invariants(g, d)) {
        if (s.poly.total_degree() != d) continue;
        std::vector<Function> trial = semi_functions;
        trial.push_back(RationalExpr(s.poly));
        const std::size_t r = functional_independence(g, trial);
        if (r <= semi_rank) continue;
        semi_rank = r;
        semi_functions.push_back(RationalExpr(s.poly));
        semis.push_back(s);
        for (const auto& w : center_weights) {
          if (!parallel(s.weight, w)) continue;
          for (unsigned k = 1; k <= budget.max_denominator_power; ++k) {
            denominators.push_back(PowerProduct(g.dim(), {{s.poly, Scalar(k)}}));
          }
          break;
        }
      }
      for (const auto& pp : power_product_combine(semis)) offer(pp, "power_product", d);
      if (rank >= result.target) break;
    }

    for (const auto& den : denominators) {
      for (const auto& f : rational_search_fixed_denominator(g, den, d)) offer(f, "rational", d);
      if (rank >= result.target) break;
    }
  }

  result.reached = rank >= result.target;
  result.report.add("target", result.reached,
                    "found " + std::to_string(rank) + " of N = " + std::to_string(result.target) +
                        " functionally independent invariants");
  result.report.add("soundness", rejected == 0,
                    rejected == 0 ? "every candidate re-verified" : std::to_string(rejected) + " candidates failed re-verification");
  result.report.data["target"] = result.target;
  result.report.data["found"] = rank;
  result.report.data["functions"] = std::move(found);
  result.report.data["budget"] = {{"max_degree", budget.max_degree},
                                  {"max_denominator_power", budget.max_denominator_power},
                                  {"extra_denominators", budget.extra_denominators.size()}};
  return result;
}

}  // namespace lieinv
