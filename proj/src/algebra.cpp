#include "lieinv/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

std::string lowercase(const std::string& s) {
  std::string out = s;
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void check_index(std::size_t idx, std::size_t dim, const char* what) {
  if (idx >= dim) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(what) + " index " + std::to_string(idx) + " >= dim " + std::to_string(dim));
  }
}

void validate_split(const Split& split, std::size_t dim) {
  std::vector<int> seen(dim, 0);
  for (auto i : split.nilradical) {
    check_index(i, dim, "nilradical");
    ++seen[i];
  }
  for (auto i : split.torus) {
    check_index(i, dim, "torus");
    ++seen[i];
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (seen[i] != 1) {
      throw Error(ErrorCode::BadParameters,
                  "split must partition the basis; index " + std::to_string(i) + " appears " +
                      std::to_string(seen[i]) + " times");
    }
  }
}

}  // namespace

LieAlgebra LieAlgebra::create(std::string name, std::size_t dim, std::vector<std::string> basis,
                              const std::vector<BracketEntry>& brackets, std::optional<Split> split) {
  if (basis.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "basis has " + std::to_string(basis.size()) + " labels for dim " + std::to_string(dim));
  }
  LieAlgebra g;
  g.name_ = std::move(name);
  std::set<std::string> labels;
  std::set<std::string> vars;
  for (const auto& label : basis) {
    if (label.empty()) throw Error(ErrorCode::DuplicateLabel, "empty basis label");
    if (!labels.insert(label).second) throw Error(ErrorCode::DuplicateLabel, "label '" + label + "' repeated");
    const auto var = lowercase(label);
    if (!vars.insert(var).second) {
      throw Error(ErrorCode::DuplicateLabel, "variable name '" + var + "' is shared by two labels");
    }
    g.variables_.push_back(var);
  }
  g.basis_ = std::move(basis);
  for (const auto& e : brackets) {
    check_index(e.i, dim, "bracket");
    check_index(e.j, dim, "bracket");
    check_index(e.k, dim, "bracket");
    if (e.i == e.j) {
      if (sgn(e.c) != 0) {
        throw Error(ErrorCode::NonzeroSelfBracket, "[e" + std::to_string(e.i) + ", e" + std::to_string(e.i) + "] != 0");
      }
      continue;
    }
    const bool flip = e.i > e.j;
    const auto key = flip ? std::make_pair(e.j, e.i) : std::make_pair(e.i, e.j);
    Scalar c = e.c;
    c.canonicalize();
    Scalar& slot = g.brackets_[key][e.k];
    slot += flip ? Scalar(-c) : c;
  }
  for (auto it = g.brackets_.begin(); it != g.brackets_.end();) {
    auto& vec = it->second;
    for (auto jt = vec.begin(); jt != vec.end();) {
      jt = sgn(jt->second) == 0 ? vec.erase(jt) : std::next(jt);
    }
    it = vec.empty() ? g.brackets_.erase(it) : std::next(it);
  }
  if (split) {
    validate_split(*split, dim);
    g.split_ = std::move(split);
  }
  return g;
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == label) return i;
  }
  return std::nullopt;
}

SparseVector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  const bool flip = i > j;
  auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets_.end()) return {};
  if (!flip) return it->second;
  SparseVector out;
  for (const auto& [k, c] : it->second) out.emplace(k, -c);
  return out;
}

Scalar LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  const bool flip = i > j;
  auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets_.end()) return 0;
  auto hit = it->second.find(k);
  if (hit == it->second.end()) return 0;
  return flip ? Scalar(-hit->second) : hit->second;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "ad: vector length differs from dim");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) += x[i] * c;
    }
  }
  return m;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra g = *this;
  g.name_ = std::move(name);
  return g;
}

Vector bracket(const LieAlgebra& g, const Vector& u, const Vector& v) {
  const std::size_t n = g.dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket operands must have length dim");
  Vector out(n);
  for (const auto& [key, vec] : g.brackets()) {
    const auto [i, j] = key;
    // [u,v] picks up u_i v_j - u_j v_i for the stored pair i<j.
    const Scalar w = u[i] * v[j] - u[j] * v[i];
    if (sgn(w) == 0) continue;
    for (const auto& [k, c] : vec) out[k] += w * c;
  }
  return out;
}

Report validate_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Report report;
  report.command = "validate_jacobi";
  auto violations = nlohmann::ordered_json::array();
  // Precompute [e_a, e_b] for all ordered pairs once.
  std::vector<SparseVector> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = g.bracket_basis(a, b);
  }
  // [[e_a, e_b], e_c] as a sparse vector.
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, SparseVector& acc) {
    for (const auto& [l, coef] : table[a * n + b]) {
      for (const auto& [s, d] : table[l * n + c]) acc[s] += coef * d;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector acc;
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        for (const auto& [s, v] : acc) {
          if (sgn(v) == 0) continue;
          violations.push_back({{"i", i}, {"j", j}, {"k", k}, {"s", s}, {"value", format_scalar(v)}});
        }
      }
    }
  }
  const bool ok = violations.empty();
  std::string detail = ok ? "all triples satisfy the Jacobi identity"
                          : std::to_string(violations.size()) + " violated (i,j,k,s) components";
  if (!ok) {
    const auto& v0 = violations.front();
    detail += "; first at (" + g.basis()[v0["i"].get<std::size_t>()] + "," + g.basis()[v0["j"].get<std::size_t>()] +
              "," + g.basis()[v0["k"].get<std::size_t>()] + ") on " + g.basis()[v0["s"].get<std::size_t>()];
  }
  report.add("jacobi", ok, detail);
  report.data["violations"] = std::move(violations);
  return report;
}

void require_jacobi(const LieAlgebra& g) {
  const Report r = validate_jacobi(g);
  if (!r.passed()) throw Error(ErrorCode::JacobiViolation, "'" + g.name() + "': " + r.verdicts.front().detail);
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Row (i, k) of the stacked system: sum_j C_ij^k c_j = 0.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : g.bracket_basis(i, j)) stacked(i * n + k, j) += c;
    }
  }
  return Subspace::span(n, nullspace(stacked));
}

LowerCentralSeries lower_central_series(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  LowerCentralSeries out;
  out.terms.push_back(Subspace::whole(n));
  while (true) {
    const Subspace& last = out.terms.back();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      const Vector ei = unit_vector(n, i);
      for (const auto& v : last.basis()) {
        Vector w = bracket(g, ei, v);
        if (!is_zero(w)) gens.push_back(std::move(w));
      }
    }
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == last.dim()) break;
    out.terms.push_back(std::move(next));
    if (out.terms.back().dim() == 0) break;
  }
  out.nilpotent = out.terms.back().dim() == 0;
  out.nilpotency_class = out.nilpotent ? out.terms.size() - 1 : 0;
  return out;
}

LieAlgebra subalgebra_restrict(const LieAlgebra& g, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> position(g.dim(), static_cast<std::size_t>(-1));
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < indices.size(); ++p) {
    const auto idx = indices[p];
    if (idx >= g.dim()) throw Error(ErrorCode::IndexOutOfRange, "restriction index " + std::to_string(idx));
    if (position[idx] != static_cast<std::size_t>(-1)) {
      throw Error(ErrorCode::DuplicateLabel, "index " + std::to_string(idx) + " selected twice");
    }
    position[idx] = p;
    labels.push_back(g.basis()[idx]);
  }
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      for (const auto& [k, c] : g.bracket_basis(indices[a], indices[b])) {
        if (position[k] == static_cast<std::size_t>(-1)) {
          throw Error(ErrorCode::NotClosed, "[" + g.basis()[indices[a]] + ", " + g.basis()[indices[b]] +
                                                "] has component on " + g.basis()[k]);
        }
        entries.push_back({a, b, position[k], c});
      }
    }
  }
  std::optional<Split> split;
  if (g.split()) {
    Split s;
    for (auto i : g.split()->nilradical) {
      if (position[i] != static_cast<std::size_t>(-1)) s.nilradical.push_back(position[i]);
    }
    for (auto i : g.split()->torus) {
      if (position[i] != static_cast<std::size_t>(-1)) s.torus.push_back(position[i]);
    }
    std::sort(s.nilradical.begin(), s.nilradical.end());
    std::sort(s.torus.begin(), s.torus.end());
    split = std::move(s);
  }
  return LieAlgebra::create(g.name(), indices.size(), std::move(labels), entries, std::move(split));
}

LieAlgebra nilradical_of(const LieAlgebra& g) {
  if (!g.split()) throw Error(ErrorCode::SplitMissing, "algebra '" + g.name() + "' has no nilradical/torus split");
  auto nil = subalgebra_restrict(g, g.split()->nilradical);
  return nil.renamed(g.name() + ".nilradical");
}

}  // namespace lieinv
