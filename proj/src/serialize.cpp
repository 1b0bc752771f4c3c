#include "lieinv/serialize.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidJson, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) invalid("expected an object");
  auto it = j.find(key);
  if (it == j.end()) invalid(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) invalid(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json& j, const char* what) {
  if (!j.is_array()) invalid(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(as_index(x, what));
  return out;
}

std::string latex_variable(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split == name.size() || split == 0) return name;
  return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string latex_scalar(const Scalar& s) {
  if (is_integer(s)) return s.get_num().get_str();
  return "\\frac{" + s.get_num().get_str() + "}{" + s.get_den().get_str() + "}";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$' || c == '{' || c == '}') out += '\\';
    if (c == '^') {
      out += "\\^{}";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["basis"] = g.basis();
  Json brackets = Json::array();
  for (const auto& [key, vec] : g.brackets()) {
    for (const auto& [k, c] : vec) {
      brackets.push_back({{"i", key.first}, {"j", key.second}, {"k", k}, {"c", format_scalar(c)}});
    }
  }
  j["brackets"] = std::move(brackets);
  if (g.split()) j["split"] = {{"nilradical", g.split()->nilradical}, {"torus", g.split()->torus}};
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  const Json& name = field(j, "name");
  if (!name.is_string()) invalid("name must be a string");
  const std::size_t dim = as_index(field(j, "dim"), "dim");
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) invalid("basis must be an array");
  std::vector<std::string> labels;
  for (const auto& b : basis) {
    if (!b.is_string()) invalid("basis labels must be strings");
    labels.push_back(b.get<std::string>());
  }
  const Json& brackets = field(j, "brackets");
  if (!brackets.is_array()) invalid("brackets must be an array");
  std::vector<BracketEntry> entries;
  for (const auto& e : brackets) {
    const Json& c = field(e, "c");
    if (!c.is_string()) invalid("bracket coefficient must be a \"p/q\" string");
    entries.push_back({as_index(field(e, "i"), "i"), as_index(field(e, "j"), "j"), as_index(field(e, "k"), "k"),
                       parse_scalar(c.get<std::string>())});
  }
  std::optional<Split> split;
  if (auto it = j.find("split"); it != j.end()) {
    split = Split{index_list(field(*it, "nilradical"), "nilradical"), index_list(field(*it, "torus"), "torus")};
  }
  return LieAlgebra::create(name.get<std::string>(), dim, std::move(labels), entries, std::move(split));
}

std::string save_algebra(const LieAlgebra& g) { return algebra_to_json(g).dump(2) + "\n"; }

LieAlgebra load_algebra(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    invalid(e.what());
  }
  return algebra_from_json(j);
}

std::string content_hash(const LieAlgebra& g) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : algebra_to_json(g).dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AlgebraFingerprint fingerprint(const LieAlgebra& g) { return {g.name(), g.dim(), content_hash(g)}; }

Json report_to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  if (r.algebra) j["algebra"] = {{"name", r.algebra->name}, {"dim", r.algebra->dim}, {"hash", r.algebra->hash}};
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  j["verdicts"] = std::move(verdicts);
  j["data"] = r.data;
  if (r.seed) j["seed"] = *r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.command = field(j, "command").get<std::string>();
    if (auto it = j.find("algebra"); it != j.end()) {
      r.algebra = AlgebraFingerprint{field(*it, "name").get<std::string>(), field(*it, "dim").get<std::size_t>(),
                                     field(*it, "hash").get<std::string>()};
    }
    for (const auto& v : field(j, "verdicts")) {
      r.verdicts.push_back({field(v, "name").get<std::string>(), field(v, "pass").get<bool>(),
                            field(v, "detail").get<std::string>()});
    }
    r.data = field(j, "data");
    if (auto it = j.find("seed"); it != j.end()) r.seed = it->get<std::uint64_t>();
    r.elapsed_ms = field(j, "elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    invalid(e.what());
  }
}

std::string render_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  if (r.algebra) out << "algebra: " << r.algebra->name << " (dim " << r.algebra->dim << ", " << r.algebra->hash << ")\n";
  for (const auto& v : r.verdicts) {
    out << (v.pass ? "[PASS] " : "[FAIL] ") << v.name;
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  for (const auto& [key, value] : r.data.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  if (r.seed) out << "seed: " << *r.seed << "\n";
  if (r.elapsed_ms != 0) out << "elapsed_ms: " << r.elapsed_ms << "\n";
  return out.str();
}

std::string render_latex(const Report& r) {
  std::ostringstream out;
  out << "\\section*{" << latex_escape(r.command);
  if (r.algebra) out << ": " << latex_escape(r.algebra->name);
  out << "}\n";
  if (!r.verdicts.empty()) {
    out << "\\begin{tabular}{lll}\n\\hline\ncheck & result & detail \\\\\n\\hline\n";
    for (const auto& v : r.verdicts) {
      out << latex_escape(v.name) << " & " << (v.pass ? "pass" : "fail") << " & " << latex_escape(v.detail)
          << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
  }
  // Expressions carry a precomputed "latex" rendering.
  std::vector<std::string> formulas;
  std::function<void(const Json&)> collect = [&](const Json& j) {
    if (j.is_object()) {
      if (auto it = j.find("latex"); it != j.end() && it->is_string()) formulas.push_back(it->get<std::string>());
      for (const auto& [k, v] : j.items()) collect(v);
    } else if (j.is_array()) {
      for (const auto& v : j) collect(v);
    }
  };
  collect(r.data);
  for (const auto& f : formulas) out << "\\[\n" << f << "\n\\]\n";
  return out.str();
}

std::string polynomial_to_latex(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    const Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += latex_variable(names[v]);
      if (e[v] > 1) mono += "^{" + std::to_string(e[v]) + "}";
    }
    if (mono.empty()) {
      out += latex_scalar(mag);
    } else {
      if (mag != 1) out += latex_scalar(mag) + " ";
      out += mono;
    }
  }
  return out;
}

std::string function_to_latex(const Function& f, std::span<const std::string> names) {
  if (const auto* r = std::get_if<RationalExpr>(&f)) {
    const std::string num = polynomial_to_latex(r->numerator(), names);
    if (r->denominator().is_constant() && r->denominator().constant_term() == 1) return num;
    return "\\frac{" + num + "}{" + polynomial_to_latex(r->denominator(), names) + "}";
  }
  const auto& pp = std::get<PowerProduct>(f);
  if (pp.empty()) return "1";
  std::string num;
  std::string den;
  for (const auto& fac : pp.factors()) {
    const bool atom = fac.base.term_count() == 1 && fac.base.leading_coefficient() == 1;
    const std::string base = polynomial_to_latex(fac.base, names);
    const Scalar e = sgn(fac.exponent) < 0 ? Scalar(-fac.exponent) : fac.exponent;
    std::string piece = atom ? base : "\\left(" + base + "\\right)";
    if (e != 1) piece += "^{" + latex_scalar(e) + "}";
    std::string& side = sgn(fac.exponent) < 0 ? den : num;
    if (!side.empty()) side += " ";
    side += piece;
  }
  if (num.empty()) num = "1";
  return den.empty() ? num : "\\frac{" + num + "}{" + den + "}";
}

}  // namespace lieinv
