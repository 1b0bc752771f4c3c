#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lieinv/catalog.hpp"
#include "lieinv/cli.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/serialize.hpp"
#include "support.hpp"

#ifndef LIEINV_TEST_DATA_DIR
#error "LIEINV_TEST_DATA_DIR must point at tests/data"
#endif

namespace lieinv {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args, const std::string& input = "") {
  const CliRun r = run_cli(args, input);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("lieinv-test-" + name);
  std::ofstream(p) << content;
  return p;
}

// ---------------------------------------------------------------- parser

TEST(Parser, RationalExample) {
  const LieAlgebra g = build(FamilySpec::d2m(3));
  const Function f = parse_expr("(y1*y2 + x3*v3)/x3", g);
  ASSERT_TRUE(std::holds_alternative<RationalExpr>(f));
  const auto& n = g.variable_names();
  const Polynomial num = Polynomial::variable(9, *g.index_of("Y1")) * Polynomial::variable(9, *g.index_of("Y2")) +
                         Polynomial::variable(9, 3) * Polynomial::variable(9, *g.index_of("V3"));
  EXPECT_EQ(std::get<RationalExpr>(f), RationalExpr(num, Polynomial::variable(9, 3)));
  EXPECT_EQ(to_string(f, n), "(x3*v3 + y1*y2)/(x3)");
}

TEST(Parser, PowerProductExample) {
  const LieAlgebra g = build(FamilySpec::d5ab(1, 1));
  const Function f = parse_expr("pow(y1, 3) * pow(x3, -3)", g);
  ASSERT_TRUE(std::holds_alternative<PowerProduct>(f));
  EXPECT_EQ(std::get<PowerProduct>(f).factors().size(), 2u);
  const Function h = parse_expr("2*pow(y1, 1/2)/x3", g);
  EXPECT_EQ(std::get<PowerProduct>(h).factors().size(), 3u);
}

TEST(Parser, Errors) {
  const LieAlgebra g = build(FamilySpec::abelian(6));
  auto code = [&](const std::string& src) {
    try {
      parse_expr(src, g);
    } catch (const Error& e) {
      return std::make_pair(e.code(), e.position());
    }
    return std::make_pair(ErrorCode::Internal, std::optional<std::size_t>{});
  };
  EXPECT_EQ(code("x9").first, ErrorCode::UnknownVariable);
  EXPECT_EQ(code("x1 + x9").second, std::optional<std::size_t>(5));
  EXPECT_EQ(code("x1 +").first, ErrorCode::SyntaxError);
  EXPECT_EQ(code("(x1").first, ErrorCode::SyntaxError);
  EXPECT_EQ(code("pow(x1, 1/2) + x2").first, ErrorCode::MixedForm);
  EXPECT_EQ(code("x1/0").first, ErrorCode::ZeroDenominator);
  EXPECT_EQ(code("x1 x2").first, ErrorCode::SyntaxError);
}

TEST(Parser, PrecedenceAndPowers) {
  const std::vector<std::string> n{"a", "b"};
  const auto a = Polynomial::variable(2, 0), b = Polynomial::variable(2, 1);
  EXPECT_EQ(parse_expr("a + b*a^2", n), Function(RationalExpr(a + b * a * a)));
  EXPECT_EQ(parse_expr("-a^2", n), Function(RationalExpr(Scalar(-1) * a * a)));
  EXPECT_EQ(parse_expr("(a+b)^-1", n), Function(RationalExpr(Polynomial::constant(2, 1), a + b)));
  EXPECT_EQ(parse_expr("a/b/a", n), Function(RationalExpr(Polynomial::constant(2, 1), b)));
}

// ------------------------------------------------------------- serialize

TEST(Json, AlgebraSchema) {
  const LieAlgebra g = LieAlgebra::create("h1", 3, {"X1", "X2", "X3"}, {{1, 0, 2, Scalar(-1, 2)}});
  const Json j = algebra_to_json(g);
  EXPECT_EQ(j.dump(), R"({"name":"h1","dim":3,"basis":["X1","X2","X3"],"brackets":[{"i":0,"j":1,"k":2,"c":"1/2"}]})");
  EXPECT_EQ(algebra_from_json(j), g);
  const LieAlgebra s = build(FamilySpec::d5prime());
  EXPECT_TRUE(algebra_to_json(s).contains("split"));
}

TEST(Json, RejectsMalformed) {
  for (const std::string text : {R"({"dim":2})", R"({"name":"x","dim":1,"basis":["A"],"brackets":[{"i":0}]})",
                                 R"({"name":"x","dim":1,"basis":["A"],"brackets":[],"split":{"nilradical":[0]}})",
                                 "[1,2]", "not json"}) {
    try {
      load_algebra(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidJson) << text;
    }
  }
}

TEST(Json, CatalogRoundTrip) {
  for (const auto& spec : {FamilySpec::d2m(5), FamilySpec::d2m1(4), FamilySpec::d5ab(Scalar(1, 3), -2),
                           FamilySpec::example9(), FamilySpec::heisenberg(2)}) {
    const LieAlgebra g = build(spec);
    EXPECT_EQ(load_algebra(save_algebra(g)), g);
    EXPECT_EQ(content_hash(load_algebra(save_algebra(g))), content_hash(g));
  }
  EXPECT_NE(content_hash(build(FamilySpec::d2m(3))), content_hash(build(FamilySpec::d2m(4))));
  EXPECT_EQ(content_hash(build(FamilySpec::d2m(3))).size(), 16u);
}

std::vector<FamilySpec> golden_specs() {
  std::vector<FamilySpec> out;
  for (unsigned m = 3; m <= 8; ++m) out.push_back(FamilySpec::d2m(m));
  for (unsigned m = 2; m <= 8; ++m) out.push_back(FamilySpec::d2m1(m));
  out.push_back(FamilySpec::d5prime());
  out.push_back(FamilySpec::d5ab(1, 1));
  out.push_back(FamilySpec::example8());
  out.push_back(FamilySpec::example9());
  return out;
}

std::string golden_name(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::D2m:
    case Family::D2m1: return family_name(spec.family) + "_m" + std::to_string(spec.m) + ".json";
    case Family::D5ab: return "d5ab_1_1.json";
    default: return family_name(spec.family) + ".json";
  }
}

TEST(Json, GoldenFixtures) {
  const fs::path dir = fs::path(LIEINV_TEST_DATA_DIR) / "golden";
  for (const auto& spec : golden_specs()) {
    const fs::path p = dir / golden_name(spec);
    ASSERT_TRUE(fs::exists(p)) << p;
    const std::string text = read_file(p);
    EXPECT_EQ(save_algebra(build(spec)), text) << p;
    EXPECT_EQ(save_algebra(load_algebra(text)), text) << p;
  }
}

TEST(Report, RenderFormats) {
  Report r;
  r.command = "verify";
  r.algebra = fingerprint(build(FamilySpec::d2m(3)));
  r.add("invariant", true, "ok");
  r.add("other", false, "bad");
  r.data["functions"] = Json::array({{{"expr", "x3"}, {"latex", "x_{3}"}}});
  EXPECT_NE(render_text(r).find("[PASS] invariant: ok"), std::string::npos);
  EXPECT_NE(render_text(r).find("[FAIL] other: bad"), std::string::npos);
  const std::string latex = render_latex(r);
  EXPECT_NE(latex.find("\\begin{tabular}"), std::string::npos);
  EXPECT_NE(latex.find("\\[\nx_{3}\n\\]"), std::string::npos);
  EXPECT_EQ(report_from_json(Json::parse(render_json(r))), r);
}

TEST(Report, LatexFractions) {
  const LieAlgebra g = build(FamilySpec::d2m(3));
  EXPECT_EQ(function_to_latex(test::expr(g, "(y1*y2 + x3*v3)/x3"), g.variable_names()),
            "\\frac{x_{3} v_{3} + y_{1} y_{2}}{x_{3}}");
  const LieAlgebra d = build(FamilySpec::d5ab(1, 1));
  EXPECT_EQ(function_to_latex(test::expr(d, "pow(y1, 3)*pow(x3, -3)"), d.variable_names()),
            "\\frac{y_{1}^{3}}{x_{3}^{3}}");
}

// ------------------------------------------------------------------- CLI

TEST(Cli, FamilyPipeCount) {
  const CliRun fam = run_cli({"family", "d2m", "--m", "3"});
  ASSERT_EQ(fam.code, 0);
  EXPECT_EQ(run_json({"count", "-"}, fam.out)["data"]["N"], 1);
  const CliRun ab = run_cli({"family", "abelian", "--n", "4"});
  EXPECT_EQ(run_json({"count", "-", "--method", "probabilistic"}, ab.out)["data"]["N"], 4);
}

TEST(Cli, VerifyPowerProductInvariant) {
  const CliRun fam = run_cli({"family", "d5prime"});
  const Json r = run_json(
      {"verify", "-", "--expr", "pow(2*x0*y1+x2^2-2*x1*x3,3)*pow(x3,-2)*pow(y1,-2)"}, fam.out);
  EXPECT_TRUE(r["verdicts"][0]["pass"].get<bool>());
  const Json bad = run_json({"verify", "-", "--expr", "x0"}, fam.out);
  EXPECT_FALSE(bad["verdicts"][0]["pass"].get<bool>());
}

TEST(Cli, DeterministicOutput) {
  const CliRun fam = run_cli({"family", "d2m1", "--m", "4"});
  const CliRun a = run_cli({"count", "-", "--method", "probabilistic", "--seed", "7"}, fam.out);
  const CliRun b = run_cli({"count", "-", "--method", "probabilistic", "--seed", "7"}, fam.out);
  EXPECT_EQ(a.out, b.out);
  const CliRun s1 = run_cli({"search", "-"}, fam.out);
  const CliRun s2 = run_cli({"search", "-"}, fam.out);
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_EQ(Json::parse(s1.out)["elapsed_ms"], 0);
}

TEST(Cli, OtherCommands) {
  const std::string d5 = run_cli({"family", "d5prime"}).out;
  EXPECT_TRUE(run_json({"validate", "-"}, d5)["verdicts"][0]["pass"].get<bool>());
  EXPECT_EQ(run_json({"charseq", "-"}, d5)["data"]["sequence"], Json::array({3, 1, 1}));
  EXPECT_TRUE(run_json({"roots", "-", "--regular", "V1"}, d5)["verdicts"][0]["pass"].get<bool>());
  const Json sub = Json::parse(run_cli({"subtorus", "-", "--alpha", "1,-1"}, d5).out);
  EXPECT_EQ(sub["dim"], 6);

  const fs::path exprs = temp_file("exprs.txt", "# F1\n(2*x0*y1 + x2^2 - 2*x1*x3)^3/(x3*y1)^2\n");
  const Json p = run_json({"prop1", "-", "--alpha", "1,1", "--exprs", exprs.string()}, d5);
  for (const auto& v : p["verdicts"]) EXPECT_TRUE(v["pass"].get<bool>()) << v.dump();

  const CliRun text = run_cli({"count", "-", "--format", "text"}, d5);
  EXPECT_NE(text.out.find("[PASS] count: N = 1"), std::string::npos);
  const CliRun latex = run_cli({"search", "-", "--format", "latex"}, d5);
  EXPECT_NE(latex.out.find("\\frac"), std::string::npos);

  const fs::path rep = temp_file("report.json", run_cli({"count", "-"}, d5).out);
  EXPECT_NE(run_cli({"report", rep.string(), "--format", "text"}).out.find("N = 1"), std::string::npos);
  EXPECT_EQ(run_json({"report", "-"}, d5)["data"]["dim"], 7);

  const CliRun claimed = run_cli({"family", "d2m", "--m", "4", "--claimed"});
  EXPECT_EQ(claimed.out, "(x3*v3 + y1*y2)/(x3)\n(x3*v4 + y3*y4)/(x3)\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"count", "/nonexistent/file.json"}).code, 1);
  EXPECT_EQ(run_cli({"family", "d2m", "--m", "1"}).code, 1);
  const std::string d3 = run_cli({"family", "d2m", "--m", "3"}).out;
  const CliRun unknown = run_cli({"verify", "-", "--expr", "x99"}, d3);
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("UnknownVariable"), std::string::npos);
  EXPECT_TRUE(unknown.out.empty());
  EXPECT_EQ(run_cli({"count", "-"}, "{").code, 1);
}

TEST(Cli, HypothesisFailureIsReportContent) {
  const std::string law =
      save_algebra(LieAlgebra::create("balanced", 4, {"Y1", "Y2", "Z", "V"}, {{0, 1, 2, 1}, {3, 0, 0, 1}, {3, 1, 1, -1}},
                                      Split{{0, 1, 2}, {3}}));
  const fs::path exprs = temp_file("empty.txt", "");
  const CliRun r = run_cli({"prop1", "-", "--alpha", "1", "--exprs", exprs.string()}, law);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(Json::parse(r.out)["verdicts"][0]["pass"].get<bool>());
}

}  // namespace
}  // namespace lieinv
