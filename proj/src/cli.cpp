#include "lieinv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "lieinv/catalog.hpp"
#include "lieinv/coadjoint.hpp"
#include "lieinv/counting.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/search.hpp"
#include "lieinv/serialize.hpp"
#include "lieinv/structure.hpp"

namespace lieinv {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_target(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) throw IoError("cannot write '" + path + "'");
}

Vector parse_list(const std::string& text) {
  Vector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    out.push_back(parse_scalar(item));
  }
  if (out.empty()) throw Error(ErrorCode::SyntaxError, "empty coefficient list");
  return out;
}

std::vector<std::string> expression_lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

Json describe(const Function& f, const LieAlgebra& g) {
  return {{"expr", to_string(f, g.variable_names())}, {"latex", function_to_latex(f, g.variable_names())}};
}

// Options shared by every report-producing command.
struct Output {
  std::string format = "json";
  bool timing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text", "latex"}));
    cmd->add_flag("--timing", timing, "Record elapsed time in the report");
  }

  std::string render(const Report& r) const {
    if (format == "text") return render_text(r);
    if (format == "latex") return render_latex(r);
    return render_json(r);
  }
};

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report summary_report(const LieAlgebra& g) {
  Report r = validate_jacobi(g);
  r.command = "report";
  r.data.erase("violations");
  const auto a = commutator_matrix(g);
  const std::size_t rk = generic_rank(a);
  r.data["dim"] = g.dim();
  r.data["rank"] = rk;
  r.data["invariant_count"] = g.dim() - rk;
  r.data["center_dim"] = center(g).dim();
  const auto lcs = lower_central_series(g);
  Json dims = Json::array();
  for (const auto& t : lcs.terms) dims.push_back(t.dim());
  r.data["lower_central_series"] = std::move(dims);
  r.data["nilpotent"] = lcs.nilpotent;
  if (g.split()) {
    try {
      const auto table = verify_torus(g);
      Json weights = Json::object();
      for (auto b : table.nilradical) {
        Json w = Json::array();
        for (const auto& x : table.weights[b]) w.push_back(format_scalar(x));
        weights[g.basis()[b]] = std::move(w);
      }
      r.data["weights"] = std::move(weights);
      r.add("torus", true, "torus is abelian and diagonal on the basis");
    } catch (const Error& e) {
      r.add("torus", false, e.what());
    }
  }
  return r;
}

int dispatch(CLI::App& app, const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  Output output;
  std::string file;
  std::uint64_t seed = kDefaultSeed;

  auto* validate = app.add_subcommand("validate", "Check the Jacobi identity");
  validate->add_option("file", file, "Algebra JSON ('-' for stdin)")->required();
  output.attach(validate);

  auto* count = app.add_subcommand("count", "Number of functionally independent invariants");
  std::string method = "auto";
  unsigned trials = 5;
  count->add_option("file", file, "Algebra JSON ('-' for stdin)")->required();
  count->add_option("--method", method, "Rank method")->check(CLI::IsMember({"auto", "symbolic", "probabilistic"}));
  count->add_option("--trials", trials, "Probabilistic trials")->check(CLI::PositiveNumber);
  count->add_option("--seed", seed, "Random seed");
  output.attach(count);

  auto* verify = app.add_subcommand("verify", "Check invariance of expressions");
  std::vector<std::string> exprs;
  std::string exprs_file;
  verify->add_option("file", file, "Algebra JSON ('-' for stdin)")->required();
  verify->add_option("--expr", exprs, "Expression (repeatable)");
  verify->add_option("--exprs", exprs_file, "File with one expression per line");
  output.attach(verify);

  auto* search = app.add_subcommand("search", "Search for a fundamental set of invariants");
  SearchBudget budget;
  std::vector<std::string> denominators;
  search->add_option("file", file, "Algebra JSON ('-' for stdin)")->required();
  search->add_option("--max-degree", budget.max_degree, "Degree budget")->check(CLI::PositiveNumber);
  search->add_option("--max-denominator-power", budget.max_denominator_power, "Largest denominator power");
  search->add_option("--denominator", denominators, "Extra denominator expression (repeatable)");
  output.attach(search);

  auto* charseq = app.add_subcommand("charseq", "Characteristic sequence (of the nilradical when split)");
  unsigned samples = 50;
  charseq->add_option("file", file, "Algebra JSON ('-' for stdin)")->required();
  charseq->add_option("--seed", seed, "Random seed");
  charseq->add_option("--samples", samples, "Random candidates");
  output.attach(charseq);

  auto* roots = app.add_subcommand("roots", "Root system of a regular torus vector");
  std::string regular;
  roots->add_option("file", file, "Algebra JSON ('-' for stdin)")->required();
  roots->add_option("--regular", regular, "Torus label or comma-separated coefficients")->required();
  roots->add_option("--seed", seed, "Random seed for the regularity test");
  output.attach(roots);

  auto* family = app.add_subcommand("family", "Emit a catalog algebra as JSON");
  std::string family_tag;
  unsigned m = 0, k = 0, n = 0;
  std::string a = "0", b = "0";
  bool errata = true;
  bool claimed = false;
  std::string out_path;
  family->add_option("name", family_tag, "d2m, d2m1, d5prime, d5ab, example9, example8, heisenberg, abelian")
      ->required();
  family->add_option("--m", m, "Family index m");
  family->add_option("--a", a, "d5ab parameter a");
  family->add_option("--b", b, "d5ab parameter b");
  family->add_option("--k", k, "Heisenberg index k");
  family->add_option("--n", n, "Abelian dimension n");
  family->add_option("--errata", errata, "Corrected d2m1 torus range (default true)");
  family->add_flag("--claimed", claimed, "Emit the claimed invariants, one per line");
  family->add_option("--out", out_path, "Output file");

  auto* subtorus = app.add_subcommand("subtorus", "Restrict the torus to one generator");
  std::string alpha;
  subtorus->add_option("file", file, "Algebra JSON ('-' for stdin)")->required();
  subtorus->add_option("--alpha", alpha, "Comma-separated torus coefficients")->required();
  subtorus->add_option("--out", out_path, "Output file");

  auto* prop1 = app.add_subcommand("prop1", "Check the subtorus restriction statement");
  prop1->add_option("file", file, "Algebra JSON ('-' for stdin)")->required();
  prop1->add_option("--alpha", alpha, "Comma-separated torus coefficients")->required();
  prop1->add_option("--exprs", exprs_file, "File with one expression per line")->required();
  output.attach(prop1);

  auto* report = app.add_subcommand("report", "Render a report, or summarize an algebra");
  report->add_option("file", file, "Report or algebra JSON ('-' for stdin)")->required();
  output.attach(report);

  app.require_subcommand(1);
  app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

  const Stopwatch clock;
  auto finish = [&](Report r, const std::optional<LieAlgebra>& g) {
    if (g) r.algebra = fingerprint(*g);
    if (output.timing) r.elapsed_ms = clock.elapsed_ms();
    out << output.render(r);
    return 0;
  };

  if (family->parsed()) {
    const auto tag = parse_family(family_tag);
    if (!tag) throw Error(ErrorCode::BadParameters, "unknown family '" + family_tag + "'");
    FamilySpec spec{*tag, m, parse_scalar(a), parse_scalar(b), k, n, errata};
    if (claimed) {
      const LieAlgebra g = build(spec);
      std::string text;
      for (const auto& f : claimed_invariants(spec)) text += to_string(f, g.variable_names()) + "\n";
      write_target(out_path, text, out);
    } else {
      write_target(out_path, save_algebra(build(spec)), out);
    }
    return 0;
  }

  const std::string source = read_source(file, in);

  if (report->parsed()) {
    Json j;
    try {
      j = Json::parse(source);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidJson, e.what());
    }
    if (j.is_object() && j.contains("command")) {
      out << output.render(report_from_json(j));
      return 0;
    }
    const LieAlgebra g = algebra_from_json(j);
    return finish(summary_report(g), g);
  }

  const LieAlgebra g = load_algebra(source);
  auto load_functions = [&]() {
    std::vector<std::string> all = exprs;
    if (!exprs_file.empty()) {
      for (auto& e : expression_lines(read_source(exprs_file, in))) all.push_back(std::move(e));
    }
    std::vector<Function> fns;
    for (const auto& e : all) fns.push_back(parse_expr(e, g));
    return fns;
  };

  if (validate->parsed()) {
    Report r = validate_jacobi(g);
    r.command = "validate";
    return finish(std::move(r), g);
  }
  if (count->parsed()) {
    RankMethod rm;
    rm.kind = method == "symbolic"        ? RankMethod::Kind::Symbolic
              : method == "probabilistic" ? RankMethod::Kind::Probabilistic
                                          : RankMethod::Kind::Auto;
    rm.trials = trials;
    rm.seed = seed;
    const std::size_t rk = generic_rank(commutator_matrix(g), rm);
    const bool symbolic = rm.kind == RankMethod::Kind::Symbolic ||
                          (rm.kind == RankMethod::Kind::Auto && g.dim() <= kSymbolicRankMaxDim);
    Report r;
    r.command = "count";
    r.add("count", true, "N = " + std::to_string(g.dim() - rk));
    r.data["N"] = g.dim() - rk;
    r.data["rank"] = rk;
    r.data["dim"] = g.dim();
    r.data["method"] = symbolic ? "symbolic" : "probabilistic";
    if (!symbolic) {
      r.data["trials"] = trials;
      r.seed = seed;
    }
    return finish(std::move(r), g);
  }
  if (verify->parsed()) {
    const auto fns = load_functions();
    if (fns.empty()) throw Error(ErrorCode::SyntaxError, "no expression given (use --expr or --exprs)");
    Report r;
    r.command = "verify";
    Json items = Json::array();
    for (std::size_t i = 0; i < fns.size(); ++i) {
      const Report one = is_invariant(g, fns[i]);
      const std::string name = fns.size() == 1 ? "invariant" : "invariant[" + std::to_string(i) + "]";
      r.add(name, one.passed(), one.verdicts.front().detail);
      Json item = describe(fns[i], g);
      item["residuals"] = one.data["residuals"];
      items.push_back(std::move(item));
    }
    r.data["functions"] = std::move(items);
    return finish(std::move(r), g);
  }
  if (search->parsed()) {
    for (const auto& d : denominators) {
      const Function f = parse_expr(d, g);
      budget.extra_denominators.push_back(std::holds_alternative<PowerProduct>(f)
                                              ? std::get<PowerProduct>(f)
                                              : PowerProduct::from_rational(std::get<RationalExpr>(f)));
    }
    auto result = fundamental_set_search(g, budget);
    Json items = Json::array();
    std::size_t i = 0;
    for (const auto& f : result.functions) {
      Json item = result.report.data["functions"][i++];
      item["latex"] = function_to_latex(f, g.variable_names());
      items.push_back(std::move(item));
    }
    result.report.data["functions"] = std::move(items);
    result.report.seed = kDefaultSeed;
    return finish(std::move(result.report), g);
  }
  if (charseq->parsed()) {
    const bool restrict = g.split() && !lower_central_series(g).nilpotent;
    const LieAlgebra target = restrict ? nilradical_of(g) : g;
    const auto cs = characteristic_sequence(target, {samples, seed});
    Report r;
    r.command = "charseq";
    std::string seq = "(";
    for (std::size_t i = 0; i < cs.blocks.size(); ++i) seq += (i ? "," : "") + std::to_string(cs.blocks[i]);
    seq += ")";
    r.add("charseq", true, seq);
    r.data["sequence"] = cs.blocks;
    Json witness = Json::array();
    for (const auto& x : cs.witness) witness.push_back(format_scalar(x));
    r.data["witness"] = std::move(witness);
    r.data["restricted_to_nilradical"] = restrict;
    r.seed = seed;
    return finish(std::move(r), g);
  }
  if (roots->parsed()) {
    if (!g.split()) throw Error(ErrorCode::SplitMissing, "algebra has no nilradical/torus split");
    Vector coeffs;
    if (const auto idx = g.index_of(regular)) {
      const auto& torus = g.split()->torus;
      const auto pos = std::find(torus.begin(), torus.end(), *idx);
      if (pos == torus.end()) throw Error(ErrorCode::BadParameters, "'" + regular + "' is not a torus generator");
      coeffs.assign(torus.size(), Scalar(0));
      coeffs[static_cast<std::size_t>(pos - torus.begin())] = 1;
    } else {
      coeffs = parse_list(regular);
    }
    const auto rs = root_system(g, coeffs, {25, seed});
    Report r;
    r.command = "roots";
    r.add("rank_condition", rs.rank_condition(),
          "rank " + std::to_string(rs.rank) + ", dim n - 1 = " + std::to_string(rs.nilradical_dim - 1));
    Json vars = Json::array();
    for (auto v : rs.variables) vars.push_back(g.basis()[v]);
    r.data["variables"] = std::move(vars);
    r.data["rows"] = rs.rows;
    r.data["rank"] = rs.rank;
    r.seed = seed;
    return finish(std::move(r), g);
  }
  if (subtorus->parsed()) {
    write_target(out_path, save_algebra(subtorus_restriction(g, parse_list(alpha))), out);
    return 0;
  }
  if (prop1->parsed()) {
    const auto fns = load_functions();
    Report r;
    try {
      r = prop1_check(g, parse_list(alpha), fns);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisFailed) throw;
      r.command = "prop1";
      r.add("hypothesis", false, e.what());
    }
    Json items = Json::array();
    for (const auto& f : fns) items.push_back(describe(f, g));
    r.data["functions"] = std::move(items);
    return finish(std::move(r), g);
  }
  throw Error(ErrorCode::Internal, "no command handled");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Casimir invariants of Lie algebras given by structure constants", "lieinv"};
  try {
    return dispatch(app, args, in, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Internal ? 2 : 1;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lieinv
