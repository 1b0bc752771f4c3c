#include "lieinv/catalog.hpp"

#include <map>

#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"

namespace lieinv {

namespace {

const std::map<Family, std::string>& family_names() {
  static const std::map<Family, std::string> names{
      {Family::D2m, "d2m"},           {Family::D2m1, "d2m1"},          {Family::D5Prime, "d5prime"},
      {Family::D5ab, "d5ab"},         {Family::Example9, "example9"},  {Family::Example8, "example8"},
      {Family::Heisenberg, "heisenberg"}, {Family::Abelian, "abelian"},
  };
  return names;
}

// Accumulates a law by label.
class LawBuilder {
 public:
  explicit LawBuilder(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = i;
  }

  void add(const std::string& a, const std::string& b, const std::string& c, const Scalar& coeff) {
    entries_.push_back({index_.at(a), index_.at(b), index_.at(c), coeff});
  }
  // [v, e] = w e
  void act(const std::string& v, const std::string& e, const Scalar& w) { add(v, e, e, w); }

  std::vector<std::size_t> indices_with_prefix(char prefix) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i][0] == prefix) out.push_back(i);
    }
    return out;
  }

  LieAlgebra finish(std::string name, std::optional<Split> split) const {
    return LieAlgebra::create(std::move(name), labels_.size(), labels_, entries_, std::move(split));
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<BracketEntry> entries_;
};

std::string idx(const char* prefix, unsigned i) { return prefix + std::to_string(i); }

std::vector<std::string> labels_for(std::initializer_list<std::pair<const char*, std::pair<unsigned, unsigned>>> ranges) {
  std::vector<std::string> out;
  for (const auto& [prefix, range] : ranges) {
    for (unsigned i = range.first; i <= range.second && range.second >= range.first; ++i) out.push_back(idx(prefix, i));
  }
  return out;
}

Split split_by_torus_prefix(const LawBuilder& law, std::size_t dim) {
  Split s;
  s.torus = law.indices_with_prefix('V');
  std::vector<bool> is_torus(dim, false);
  for (auto t : s.torus) is_torus[t] = true;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!is_torus[i]) s.nilradical.push_back(i);
  }
  return s;
}

// Shared part of d2m and d2m1: filiform chain, pairs Y(2i-1), Y(2i) over X3
// for 1 <= i <= m-2, and the V1, V2 actions on them.
void d_family_core(LawBuilder& law, unsigned m) {
  law.add("X0", "X1", "X2", 1);
  law.add("X0", "X2", "X3", 1);
  for (unsigned i = 0; i < 4; ++i) law.act("V1", idx("X", i), i + 1);
  for (unsigned i = 1; i < 4; ++i) law.act("V2", idx("X", i), 1);
  for (unsigned i = 1; i + 2 <= m; ++i) {
    law.add(idx("Y", 2 * i - 1), idx("Y", 2 * i), "X3", 1);
    law.act("V1", idx("Y", 2 * i - 1), i + 4);
    law.act("V1", idx("Y", 2 * i), -static_cast<long>(i));
    law.act("V2", idx("Y", 2 * i), 1);
    law.act(idx("V", i + 2), idx("Y", 2 * i - 1), 1);
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::BadParameters, msg);
}

LieAlgebra build_unchecked(const FamilySpec& spec) {
  const std::string name = spec_name(spec);
  switch (spec.family) {
    case Family::D2m: {
      const unsigned m = spec.m;
      require(m >= 3, "d2m needs m >= 3");
      LawBuilder law(labels_for({{"X", {0, 3}}, {"Y", {1, 2 * m - 4}}, {"V", {1, m}}}));
      d_family_core(law, m);
      for (unsigned i = 1; i + 2 <= m; ++i) law.act(idx("V", i + 2), idx("Y", 2 * i), -1);
      return law.finish(name, split_by_torus_prefix(law, 3 * m));
    }
    case Family::D2m1: {
      const unsigned m = spec.m;
      require(m >= 2, "d2m1 needs m >= 2");
      LawBuilder law(labels_for({{"X", {0, 3}}, {"Y", {1, 2 * m - 3}}, {"V", {1, m}}}));
      d_family_core(law, m);
      const std::string y = idx("Y", 2 * m - 3);
      law.add("X1", y, "X3", 1);
      law.act("V1", y, 2);
      const unsigned last = spec.errata ? m - 2 : m - 3;
      for (unsigned i = 1; i <= last && m >= 3; ++i) law.act(idx("V", i + 2), idx("Y", 2 * i), -1);
      return law.finish(name, split_by_torus_prefix(law, 3 * m + 1));
    }
    case Family::D5Prime: {
      LawBuilder law({"X0", "X1", "X2", "X3", "Y1", "V1", "V2"});
      law.add("X0", "X1", "X2", 1);
      law.add("X0", "X2", "X3", 1);
      law.add("X1", "X2", "Y1", 1);
      for (unsigned i = 0; i < 4; ++i) law.act("V1", idx("X", i), i + 1);
      for (unsigned i = 1; i < 4; ++i) law.act("V2", idx("X", i), 1);
      law.act("V1", "Y1", 5);
      law.act("V2", "Y1", 2);
      return law.finish(name, split_by_torus_prefix(law, 7));
    }
    case Family::D5ab: {
      const Scalar& a = spec.a;
      const Scalar& b = spec.b;
      require(sgn(a) != 0 || sgn(b) != 0, "d5ab needs (a, b) != (0, 0)");
      LawBuilder law({"X0", "X1", "X2", "X3", "Y1", "V"});
      law.add("X0", "X1", "X2", 1);
      law.add("X0", "X2", "X3", 1);
      law.add("X1", "X2", "Y1", 1);
      law.act("V", "X0", a);
      law.act("V", "X1", b);
      law.act("V", "X2", a + b);
      law.act("V", "X3", 2 * a + b);
      law.act("V", "Y1", a + 2 * b);
      return law.finish(name, split_by_torus_prefix(law, 6));
    }
    case Family::Example9:
    case Family::Example8: {
      const bool nine = spec.family == Family::Example9;
      auto labels = labels_for({{"Y", {1, 7}}});
      if (nine) labels.push_back("V1");
      labels.push_back("V2");
      LawBuilder law(labels);
      if (nine) {
        for (unsigned i = 1; i <= 7; ++i) law.act("V1", idx("Y", i), i);
      }
      for (unsigned i = 2; i <= 7; ++i) law.act("V2", idx("Y", i), 1);
      for (unsigned i = 2; i <= 6; ++i) law.add("Y1", idx("Y", i), idx("Y", i + 1), 1);
      return law.finish(name, split_by_torus_prefix(law, labels.size()));
    }
    case Family::Heisenberg: {
      require(spec.k >= 1, "heisenberg needs k >= 1");
      auto labels = labels_for({{"Y", {1, 2 * spec.k}}});
      labels.push_back("Z");
      LawBuilder law(labels);
      for (unsigned i = 1; i <= spec.k; ++i) law.add(idx("Y", 2 * i - 1), idx("Y", 2 * i), "Z", 1);
      return law.finish(name, std::nullopt);
    }
    case Family::Abelian: {
      require(spec.n >= 1, "abelian needs n >= 1");
      LawBuilder law(labels_for({{"X", {1, spec.n}}}));
      return law.finish(name, std::nullopt);
    }
  }
  throw Error(ErrorCode::BadParameters, "unknown family");
}

std::vector<Function> parse_all(const LieAlgebra& g, const std::vector<std::string>& sources) {
  std::vector<Function> out;
  for (const auto& s : sources) out.push_back(parse_expr(s, g));
  return out;
}

const char* const kF1 = "(2*x0*y1 + x2^2 - 2*x1*x3)^3/(x3*y1)^2";

const char* const kG1 =
    "(6*y4*y6*y7^2 - 6*y3*y7^3 + 2*y6^4 - 8*y5*y6^2*y7 + 5*y5^2*y7^2)"
    "/(3*y4*y7^3 + y6^3*y7 - 3*y5*y6*y7^2)";
const char* const kG2 =
    "(-5*y2*y7^4 + 5*y4*y5*y7^3 + 5*y5*y6^3*y7 - 5*y5^2*y6*y7^2 - y6^5 + 5*y3*y6*y7^3 - 5*y4*y6^2*y7^2)"
    "/(3*y4*y7^4 + y6^3*y7^2 - 3*y5*y6*y7^3)";

std::string pair_invariant(unsigned k) {
  return "(" + idx("y", 2 * k - 1) + "*" + idx("y", 2 * k) + " + x3*" + idx("v", k + 2) + ")/x3";
}

// In build(d2m1) coordinates the printed v1 is the dual coordinate of the
// table generator V1 - 2 V2 - sum_i (i+4) V(i+2).
std::string d2m1_first(unsigned m, bool printed) {
  const std::string y = idx("y", 2 * m - 3);
  std::string v1 = "v1";
  if (!printed) {
    v1 = "(v1 - 2*v2";
    for (unsigned i = 1; i + 2 <= m; ++i) v1 += " - " + std::to_string(i + 4) + "*" + idx("v", i + 2);
    v1 += ")";
  }
  return "(x0*x2*x3 + x2^2*" + y + " - 2*x3^2*v2 + " + v1 + "*x3^2 - 2*x1*x3*" + y + ")/(-2*x3^2)";
}

}  // namespace

std::string family_name(Family f) { return family_names().at(f); }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : family_names()) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::string spec_name(const FamilySpec& spec) {
  const std::string base = family_name(spec.family);
  switch (spec.family) {
    case Family::D2m: return base + "(m=" + std::to_string(spec.m) + ")";
    case Family::D2m1:
      return base + "(m=" + std::to_string(spec.m) + (spec.errata ? "" : ",verbatim") + ")";
    case Family::D5ab: return base + "(a=" + format_scalar(spec.a) + ",b=" + format_scalar(spec.b) + ")";
    case Family::Heisenberg: return base + "(k=" + std::to_string(spec.k) + ")";
    case Family::Abelian: return base + "(n=" + std::to_string(spec.n) + ")";
    default: return base;
  }
}

LieAlgebra build(const FamilySpec& spec) {
  LieAlgebra g = build_unchecked(spec);
  if (spec.family != Family::D2m1 || spec.errata) require_jacobi(g);
  return g;
}

std::vector<Function> claimed_invariants(const FamilySpec& spec) {
  const LieAlgebra g = build(spec);
  std::vector<std::string> src;
  switch (spec.family) {
    case Family::D2m:
      for (unsigned k = 1; k + 2 <= spec.m; ++k) src.push_back(pair_invariant(k));
      break;
    case Family::D2m1:
      src.push_back(d2m1_first(spec.m, false));
      for (unsigned k = 1; k + 2 <= spec.m; ++k) src.push_back(pair_invariant(k));
      break;
    case Family::D5Prime: src.push_back(kF1); break;
    case Family::D5ab: {
      src.push_back(kF1);
      const Scalar p = 2 * spec.a + spec.b;
      const Scalar q = spec.a + 2 * spec.b;
      if (sgn(p) == 0) {
        src.push_back("x3");
      } else if (sgn(q) == 0) {
        src.push_back("y1");
      } else {
        src.push_back("pow(y1, " + format_scalar(p) + ")*pow(x3, " + format_scalar(Scalar(-q)) + ")");
      }
      break;
    }
    case Family::Example9: src.push_back(std::string("(") + kG2 + ")/(" + kG1 + ")^2"); break;
    case Family::Example8:
      src.push_back(kG1);
      src.push_back(kG2);
      break;
    case Family::Heisenberg: src.push_back("z"); break;
    case Family::Abelian:
      for (unsigned i = 1; i <= spec.n; ++i) src.push_back(idx("x", i));
      break;
  }
  return parse_all(g, src);
}

Matrix table_torus_basis(std::size_t p) {
  if (p < 2) throw Error(ErrorCode::BadParameters, "table torus basis needs at least two torus generators");
  Matrix t = Matrix::identity(p);
  t(0, 1) = -2;
  for (std::size_t u = 2; u < p; ++u) t(0, u) = -static_cast<long>(u + 3);
  return t;
}

RationalExpr d2m1_printed_invariant(const LieAlgebra& g, unsigned m) {
  return std::get<RationalExpr>(parse_expr(d2m1_first(m, true), g));
}

}  // namespace lieinv
