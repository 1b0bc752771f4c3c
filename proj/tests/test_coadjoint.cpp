#include <gtest/gtest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/coadjoint.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/structure.hpp"
#include "support.hpp"

namespace lieinv {
namespace {

std::vector<VectorField> flipped(const LieAlgebra& g) {
  std::vector<VectorField> ops;
  for (const auto& v : coadjoint_operators(g)) ops.push_back(v.negated());
  return ops;
}

TEST(Coadjoint, OddFamilyX3Operator) {
  const LieAlgebra g = build(FamilySpec::d2m1(3));
  const auto& n = g.variable_names();
  // Catalog torus: [V1, X3] = 4 X3, [V2, X3] = X3.
  EXPECT_EQ(coadjoint_operator(g, *g.index_of("X3")).to_string(n), "(4*x3)*d/dv1 + (x3)*d/dv2");
  // In the table torus basis V1 - 2 V2 - 5 V3 the V1 weight of X3 drops to 2.
  const LieAlgebra t = change_torus_basis(g, table_torus_basis(3));
  EXPECT_EQ(coadjoint_operator(t, *t.index_of("X3")).to_string(n), "(2*x3)*d/dv1 + (x3)*d/dv2");
}

TEST(Coadjoint, AbelianOperatorsVanish) {
  for (const auto& v : coadjoint_operators(build(FamilySpec::abelian(4)))) EXPECT_TRUE(v.is_zero());
}

TEST(Coadjoint, HeisenbergOperatorByHand) {
  const LieAlgebra g = LieAlgebra::create("h1", 3, {"X1", "X2", "X3"}, {{0, 1, 2, 1}});
  const VectorField v = coadjoint_operator(g, 0);
  ASSERT_EQ(v.terms().size(), 1u);
  EXPECT_EQ(v.terms()[0].target, 1u);
  EXPECT_EQ(v.terms()[0].coefficient, Scalar(-1) * Polynomial::variable(3, 2));
  EXPECT_THROW(coadjoint_operator(g, 3), Error);
}

TEST(Coadjoint, ApplyVf) {
  const LieAlgebra g = build(FamilySpec::d2m(3));
  const RationalExpr f1 = test::rational(g, "(y1*y2 + x3*v3)/x3");
  EXPECT_TRUE(apply_vf(coadjoint_operator(g, *g.index_of("X3")), f1).is_zero());
  for (const auto& v : coadjoint_operators(g)) {
    EXPECT_TRUE(apply_vf(v, RationalExpr(Polynomial::constant(g.dim(), 1))).is_zero());
  }

  const LieAlgebra d = build(FamilySpec::d5prime());
  const Polynomial p = test::poly(d, "2*x0*y1 + x2^2 - 2*x1*x3");
  EXPECT_TRUE(coadjoint_operator(d, *d.index_of("X0")).apply(p).is_zero());
}

TEST(Coadjoint, IsInvariantRational) {
  const LieAlgebra g = build(FamilySpec::d2m(3));
  EXPECT_TRUE(is_invariant(g, test::expr(g, "(y1*y2 + x3*v3)/x3")).passed());
  const LieAlgebra d = build(FamilySpec::d5prime());
  EXPECT_TRUE(is_invariant(d, test::expr(d, "(2*x0*y1 + x2^2 - 2*x1*x3)^3/(x3^2*y1^2)")).passed());

  const Report r = is_invariant_rational(g, test::rational(g, "x0"));
  EXPECT_FALSE(r.passed());
  // X^1 x0 = -C_{1,0}^k x_k = x2 from [X0, X1] = X2.
  EXPECT_EQ(coadjoint_operator(g, *g.index_of("X1")).apply(test::poly(g, "x0")), test::poly(g, "x2"));
  EXPECT_NE(r.data.dump().find("X1"), std::string::npos);
}

TEST(Coadjoint, IsInvariantPowerProduct) {
  const LieAlgebra g = build(FamilySpec::d5ab(1, 1));
  EXPECT_TRUE(is_invariant(g, test::expr(g, "pow(y1, 3)*pow(x3, -3)")).passed());
  EXPECT_TRUE(is_invariant(g, test::expr(g, "pow(x0 + x1, 1)*pow(x0 + x1, -1)")).passed());
  EXPECT_FALSE(is_invariant(g, test::expr(g, "pow(y1, 1)*pow(x3, -3)")).passed());
  const LieAlgebra c = build(FamilySpec::d5ab(1, -2));
  EXPECT_TRUE(is_invariant(c, test::expr(c, "pow(x3, 1)")).passed());
}

TEST(Coadjoint, PowerProductDefectMatchesRationalCheck) {
  const LieAlgebra d = build(FamilySpec::d5prime());
  const Function pp = test::expr(d, "pow(2*x0*y1 + x2^2 - 2*x1*x3, 3)*pow(x3, -2)*pow(y1, -2)");
  for (const auto& v : coadjoint_operators(d)) {
    EXPECT_TRUE(power_product_defect(v, std::get<PowerProduct>(pp)).is_zero());
  }
}

TEST(Coadjoint, SignFlipRobustness) {
  for (const auto& spec : {FamilySpec::d2m(4), FamilySpec::d2m1(3), FamilySpec::d5prime(), FamilySpec::d5ab(2, -1)}) {
    const LieAlgebra g = build(spec);
    const auto ops = flipped(g);
    std::vector<std::string> labels(g.basis());
    std::vector<Function> fns = claimed_invariants(spec);
    fns.push_back(test::expr(g, "x0"));
    fns.push_back(test::expr(g, "pow(x3, 1/2)*pow(x0, 1)"));
    for (const auto& f : fns) {
      const bool plain = is_invariant(g, f).passed();
      const bool neg = std::holds_alternative<RationalExpr>(f)
                           ? is_invariant_rational(ops, labels, g.variable_names(), std::get<RationalExpr>(f)).passed()
                           : is_invariant_power_product(ops, labels, g.variable_names(), std::get<PowerProduct>(f))
                                 .passed();
      EXPECT_EQ(plain, neg) << g.name();
    }
  }
}

TEST(Coadjoint, ClaimedInvariantsPass) {
  for (const auto& spec : {FamilySpec::d2m(3), FamilySpec::d2m(6), FamilySpec::d2m1(2), FamilySpec::d2m1(5),
                           FamilySpec::d5prime(), FamilySpec::d5ab(1, 1), FamilySpec::d5ab(1, -2),
                           FamilySpec::d5ab(-2, 1), FamilySpec::example8(), FamilySpec::example9(),
                           FamilySpec::heisenberg(3), FamilySpec::abelian(2)}) {
    const LieAlgebra g = build(spec);
    for (const auto& f : claimed_invariants(spec)) {
      EXPECT_TRUE(is_invariant(g, f).passed()) << g.name() << ": " << to_string(f, g.variable_names());
    }
  }
}

TEST(Coadjoint, PrintedOddInvariantHoldsInTableBasis) {
  for (unsigned m = 2; m <= 5; ++m) {
    const LieAlgebra g = build(FamilySpec::d2m1(m));
    const LieAlgebra t = change_torus_basis(g, table_torus_basis(g.split()->torus.size()));
    const RationalExpr printed = d2m1_printed_invariant(t, m);
    EXPECT_TRUE(is_invariant_rational(t, printed).passed()) << m;
  }
}

}  // namespace
}  // namespace lieinv
