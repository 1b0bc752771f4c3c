#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "lieinv/catalog.hpp"
#include "lieinv/counting.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/search.hpp"
#include "support.hpp"

namespace lieinv {
namespace {

std::vector<Function> as_functions(const std::vector<RationalExpr>& fs) { return {fs.begin(), fs.end()}; }

// Dense oracle: unknown coefficient per monomial of degree 1..d, one linear
// equation per monomial of every X^_i P, solved by plain elimination.
std::size_t dense_invariant_dimension(const LieAlgebra& g, unsigned d) {
  const std::size_t n = g.dim();
  std::vector<Exponents> monos;
  std::function<void(Exponents&, std::size_t, unsigned)> gen = [&](Exponents& e, std::size_t v, unsigned left) {
    if (v == n) {
      if (total_degree(e) >= 1) monos.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = k;
      gen(e, v + 1, left - k);
    }
    e[v] = 0;
  };
  Exponents e(n, 0);
  gen(e, 0, d);
  std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
  std::vector<std::vector<Scalar>> rows;
  const auto ops = coadjoint_operators(g);
  for (std::size_t c = 0; c < monos.size(); ++c) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const Polynomial image = ops[i].apply(Polynomial::monomial(monos[c], 1));
      for (const auto& [exps, coeff] : image.terms()) {
        auto [it, fresh] = row_of.try_emplace({i, exps}, rows.size());
        if (fresh) rows.emplace_back(monos.size());
        rows[it->second][c] += coeff;
      }
    }
  }
  return monos.size() - test::oracle_rank(rows);
}

bool in_span(const std::vector<Polynomial>& basis, const Polynomial& p) {
  std::map<Exponents, std::size_t, GrlexGreater> col;
  auto index = [&](const Polynomial& q) {
    for (const auto& [e, c] : q.terms()) col.try_emplace(e, col.size());
  };
  for (const auto& b : basis) index(b);
  index(p);
  auto row = [&](const Polynomial& q) {
    std::vector<Scalar> r(col.size());
    for (const auto& [e, c] : q.terms()) r[col[e]] = c;
    return r;
  };
  std::vector<std::vector<Scalar>> m;
  for (const auto& b : basis) m.push_back(row(b));
  const auto before = test::oracle_rank(m);
  m.push_back(row(p));
  return test::oracle_rank(m) == before;
}

TEST(Ansatz, Ordering) {
  const AnsatzSpace a = AnsatzSpace::make(3, 1, 2);
  ASSERT_EQ(a.dim(), 9u);
  EXPECT_EQ(a.monomials.front(), (Exponents{1, 0, 0}));
  EXPECT_EQ(a.monomials[3], (Exponents{2, 0, 0}));
  EXPECT_EQ(a.combine(unit_vector(9, 1)), Polynomial::variable(3, 1));
}

TEST(PolynomialInvariants, Examples) {
  const LieAlgebra c = build(FamilySpec::d5ab(1, -2));
  const auto pc = polynomial_invariants(c, 1);
  EXPECT_TRUE(in_span(pc, test::poly(c, "x3")));

  const auto pa = polynomial_invariants(build(FamilySpec::abelian(3)), 1);
  EXPECT_EQ(pa.size(), 3u);

  const LieAlgebra g = build(FamilySpec::d2m(3));
  EXPECT_TRUE(polynomial_invariants(g, 2).empty());
  EXPECT_EQ(dense_invariant_dimension(g, 2), 0u);
}

TEST(PolynomialInvariants, DenseOracleAgrees) {
  for (const auto& spec : {FamilySpec::heisenberg(2), FamilySpec::d5ab(1, -2), FamilySpec::abelian(2)}) {
    const LieAlgebra g = build(spec);
    EXPECT_EQ(polynomial_invariants(g, 2).size(), dense_invariant_dimension(g, 2)) << g.name();
  }
}

TEST(PolynomialInvariants, DeterministicAndSignFlipStable) {
  const LieAlgebra g = build(FamilySpec::heisenberg(2));
  const auto first = polynomial_invariants(g, 3);
  EXPECT_EQ(first, polynomial_invariants(g, 3));
  std::vector<VectorField> neg;
  for (const auto& v : coadjoint_operators(g)) neg.push_back(v.negated());
  EXPECT_EQ(polynomial_invariants(neg, g.dim(), 3), first);
}

bool has_semi(const std::vector<SemiInvariant>& semis, const Polynomial& p, const Vector& w) {
  for (const auto& s : semis) {
    if (s.weight == w && in_span({s.poly}, p)) return true;
  }
  return false;
}

TEST(SemiInvariants, Examples) {
  const LieAlgebra d = build(FamilySpec::d5prime());
  const auto s1 = semi_invariants(d, 1);
  EXPECT_TRUE(has_semi(s1, test::poly(d, "x3"), Vector{4, 1}));
  EXPECT_TRUE(has_semi(s1, test::poly(d, "y1"), Vector{5, 2}));
  const auto s2 = semi_invariants(d, 2);
  EXPECT_TRUE(has_semi(s2, test::poly(d, "2*x0*y1 + x2^2 - 2*x1*x3"), Vector{6, 2}));

  const LieAlgebra z = LieAlgebra::create("zero-torus", 3, {"A", "B", "V"}, {}, Split{{0, 1}, {2}});
  const auto sz = semi_invariants(z, 2);
  // a, b, v and their products: 3 + 6 monomials.
  EXPECT_EQ(sz.size(), 9u);
  for (const auto& s : sz) EXPECT_EQ(s.weight, Vector{0});
}

TEST(SemiInvariants, DefiningEquations) {
  const LieAlgebra d = build(FamilySpec::d5ab(1, 1));
  const auto ops = coadjoint_operators(d);
  const auto split = *d.split();
  for (const auto& s : semi_invariants(d, 2)) {
    for (auto i : split.nilradical) EXPECT_TRUE(ops[i].apply(s.poly).is_zero());
    for (std::size_t t = 0; t < split.torus.size(); ++t) {
      EXPECT_EQ(ops[split.torus[t]].apply(s.poly), Scalar(-s.weight[t]) * s.poly);
    }
  }
}

TEST(PowerProductCombine, Examples) {
  const LieAlgebra g = build(FamilySpec::d5ab(1, 1));
  const std::vector<SemiInvariant> semis{{test::poly(g, "y1"), Vector{3}}, {test::poly(g, "x3"), Vector{3}}};
  const auto out = power_product_combine(semis);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(is_invariant(g, out[0]).passed());
  const std::vector<Function> pair{out[0], test::expr(g, "pow(y1, 3)*pow(x3, -3)")};
  EXPECT_EQ(functional_independence(g, pair), 1u);

  const auto single = power_product_combine(std::vector<SemiInvariant>{{test::poly(g, "x3"), Vector{0}}});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], PowerProduct(g.dim(), {{test::poly(g, "x3"), 1}}));

  const LieAlgebra d = build(FamilySpec::d5prime());
  const Polynomial p = test::poly(d, "2*x0*y1 + x2^2 - 2*x1*x3");
  const std::vector<SemiInvariant> three{
      {test::poly(d, "x3"), Vector{4, 1}}, {test::poly(d, "y1"), Vector{5, 2}}, {p, Vector{6, 2}}};
  const auto f = power_product_combine(three);
  ASSERT_EQ(f.size(), 1u);
  Vector exps;
  for (const auto& s : three) {
    for (const auto& factor : f[0].factors()) {
      if (factor.base == s.poly) exps.push_back(factor.exponent);
    }
  }
  ASSERT_EQ(exps.size(), 3u);
  const Scalar k = exps[2] / 3;
  EXPECT_EQ(exps, (Vector{-2 * k, -2 * k, 3 * k}));
}

TEST(PowerProductCombine, OutputsHaveZeroWeight) {
  const LieAlgebra d = build(FamilySpec::d5prime());
  const auto semis = semi_invariants(d, 2);
  for (const auto& f : power_product_combine(semis)) {
    Vector total(2);
    for (const auto& factor : f.factors()) {
      for (const auto& s : semis) {
        if (s.poly == factor.base) {
          for (std::size_t t = 0; t < 2; ++t) total[t] += factor.exponent * s.weight[t];
        }
      }
    }
    EXPECT_TRUE(is_zero(total));
    EXPECT_TRUE(is_invariant(d, f).passed());
  }
}

TEST(RationalSearch, EvenFamilyWithLinearDenominator) {
  for (unsigned m = 3; m <= 4; ++m) {
    const FamilySpec spec = FamilySpec::d2m(m);
    const LieAlgebra g = build(spec);
    const PowerProduct x3(g.dim(), {{test::poly(g, "x3"), 1}});
    const auto found = rational_search_fixed_denominator(g, x3, 2);
    std::vector<Polynomial> numerators;
    for (const auto& f : found) {
      EXPECT_TRUE(is_invariant_rational(g, f).passed());
      numerators.push_back(f.numerator() * (Scalar(1) / f.denominator().leading_coefficient()));
    }
    EXPECT_TRUE(in_span(numerators, test::poly(g, "y1*y2 + x3*v3")));
    if (m == 4) {
      EXPECT_TRUE(in_span(numerators, test::poly(g, "y3*y4 + x3*v4")));
    }
  }
}

TEST(RationalSearch, TrivialDenominatorIsPolynomialSearch) {
  const LieAlgebra g = build(FamilySpec::heisenberg(2));
  const auto found = rational_search_fixed_denominator(g, PowerProduct(g.dim()), 2);
  const auto poly = polynomial_invariants(g, 2);
  std::vector<Polynomial> nums;
  for (const auto& f : found) nums.push_back(f.numerator());
  ASSERT_EQ(nums.size(), poly.size());
  for (const auto& p : poly) EXPECT_TRUE(in_span(nums, p));
}

TEST(RationalSearch, OddFamilyQuadraticDenominator) {
  const FamilySpec spec = FamilySpec::d2m1(2);
  const LieAlgebra g = build(spec);
  const PowerProduct d(g.dim(), {{test::poly(g, "x3"), 2}});
  const auto found = rational_search_fixed_denominator(g, d, 3);
  ASSERT_FALSE(found.empty());
  std::vector<Function> joint = as_functions(found);
  const std::size_t alone = functional_independence(g, joint);
  joint.push_back(claimed_invariants(spec)[0]);
  EXPECT_EQ(functional_independence(g, joint), alone);
}

TEST(RationalSearch, Errors) {
  const LieAlgebra g = build(FamilySpec::d2m(3));
  try {
    rational_search_fixed_denominator(g, PowerProduct(g.dim(), {{test::poly(g, "x0"), 1}}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DenominatorNotSemiInvariant);
  }
  try {
    rational_search_fixed_denominator(g, PowerProduct(g.dim(), {{test::poly(g, "x3"), Scalar(1, 2)}}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParameters);
  }
}

TEST(FundamentalSet, ReachesTarget) {
  for (const auto& spec : {FamilySpec::d2m(3), FamilySpec::d2m(4), FamilySpec::d5prime(), FamilySpec::d5ab(1, 1),
                           FamilySpec::abelian(3), FamilySpec::d2m1(2)}) {
    const LieAlgebra g = build(spec);
    const auto r = fundamental_set_search(g);
    EXPECT_TRUE(r.reached) << g.name();
    EXPECT_EQ(r.functions.size(), invariant_count(g)) << g.name();
    for (const auto& f : r.functions) EXPECT_TRUE(is_invariant(g, f).passed());
    std::vector<Function> joint = r.functions;
    for (const auto& f : claimed_invariants(spec)) joint.push_back(f);
    EXPECT_EQ(functional_independence(g, joint), r.target) << g.name();
  }
}

TEST(FundamentalSet, SmallBudget) {
  const LieAlgebra g = build(FamilySpec::d2m(4));
  SearchBudget budget;
  budget.max_degree = 2;
  budget.max_denominator_power = 1;
  budget.extra_denominators.push_back(PowerProduct(g.dim(), {{test::poly(g, "x3"), 1}}));
  const auto r = fundamental_set_search(g, budget);
  EXPECT_TRUE(r.reached);
  EXPECT_EQ(r.functions.size(), 2u);
}

TEST(FundamentalSet, ExampleEightContainsPrintedPair) {
  const FamilySpec spec = FamilySpec::example8();
  const LieAlgebra g = build(spec);
  SearchBudget budget;
  budget.max_degree = 5;
  const auto r = fundamental_set_search(g, budget);
  EXPECT_TRUE(r.reached);
  std::vector<Function> joint = r.functions;
  for (const auto& f : claimed_invariants(spec)) joint.push_back(f);
  EXPECT_EQ(functional_independence(g, joint), functional_independence(g, r.functions));
}

TEST(FundamentalSet, ReportsBudgetExhaustion) {
  const LieAlgebra g = build(FamilySpec::d5prime());
  SearchBudget budget;
  budget.max_degree = 1;
  const auto r = fundamental_set_search(g, budget);
  EXPECT_FALSE(r.reached);
  EXPECT_EQ(r.report.find("target")->pass, false);
  EXPECT_TRUE(r.report.find("soundness")->pass);
}

}  // namespace
}  // namespace lieinv
