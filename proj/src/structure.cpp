#include "lieinv/structure.hpp"

#include <algorithm>
#include <string>

#include "lieinv/coadjoint.hpp"
#include "lieinv/counting.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/linalg.hpp"

namespace lieinv {

namespace {

const Split& require_split(const LieAlgebra& g) {
  if (!g.split()) throw Error(ErrorCode::SplitMissing, "algebra '" + g.name() + "' has no nilradical/torus split");
  return *g.split();
}

void require_alpha(const Split& split, const Vector& alpha) {
  if (alpha.size() != split.torus.size()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(split.torus.size()) +
                                                  " torus coefficients, got " + std::to_string(alpha.size()));
  }
  if (is_zero(alpha)) throw Error(ErrorCode::ZeroAlpha, "torus combination is zero");
}

Vector torus_vector(const LieAlgebra& g, const Split& split, const Vector& alpha) {
  Vector v(g.dim());
  for (std::size_t t = 0; t < split.torus.size(); ++t) v[split.torus[t]] = alpha[t];
  return v;
}

}  // namespace

CharSequence jordan_sequence(const LieAlgebra& g, const Vector& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from algebra dimension");
  const Matrix ad = g.ad(x);
  std::vector<std::size_t> ranks{n};
  Matrix p = Matrix::identity(n);
  for (std::size_t s = 1; s <= n; ++s) {
    p = p * ad;
    ranks.push_back(rank(p));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0) throw Error(ErrorCode::NotNilpotentOperator, "ad(X) is not nilpotent");
  // at_least[s] = number of blocks of size >= s
  std::vector<std::size_t> at_least(ranks.size() + 1, 0);
  for (std::size_t s = 1; s < ranks.size(); ++s) at_least[s] = ranks[s - 1] - ranks[s];
  CharSequence out;
  out.witness = x;
  for (std::size_t s = ranks.size() - 1; s >= 1; --s) {
    if (at_least[s] < at_least[s + 1]) throw Error(ErrorCode::Internal, "Jordan block counts not monotone");
    out.blocks.insert(out.blocks.end(), at_least[s] - at_least[s + 1], s);
  }
  return out;
}

CharSequence characteristic_sequence(const LieAlgebra& g, const CharSequenceOptions& options) {
  const auto lcs = lower_central_series(g);
  if (!lcs.nilpotent) throw Error(ErrorCode::NotNilpotent, "algebra '" + g.name() + "' is not nilpotent");
  const std::size_t n = g.dim();
  const Subspace derived = lcs.terms.size() > 1 ? lcs.terms[1] : Subspace::zero(n);
  std::optional<CharSequence> best;
  auto consider = [&](const Vector& x) {
    if (derived.contains(x)) return;
    auto c = jordan_sequence(g, x);
    if (!best || c.blocks > best->blocks) best = std::move(c);
  };
  for (std::size_t i = 0; i < n; ++i) consider(unit_vector(n, i));
  PointSampler sampler(options.seed, 100);
  for (unsigned s = 0; s < options.samples; ++s) consider(sampler.point(n));
  if (!best) return CharSequence{{}, Vector(n)};
  return *best;
}

WeightTable verify_torus(const LieAlgebra& g) {
  const Split& split = require_split(g);
  for (std::size_t a = 0; a < split.torus.size(); ++a) {
    for (std::size_t b = a + 1; b < split.torus.size(); ++b) {
      if (!g.bracket_basis(split.torus[a], split.torus[b]).empty()) {
        throw Error(ErrorCode::TorusNotAbelian,
                    "[" + g.basis()[split.torus[a]] + ", " + g.basis()[split.torus[b]] + "] is nonzero");
      }
    }
  }
  WeightTable table{split.torus, split.nilradical, std::vector<Vector>(g.dim(), Vector(split.torus.size()))};
  for (std::size_t t = 0; t < split.torus.size(); ++t) {
    for (std::size_t b = 0; b < g.dim(); ++b) {
      const auto image = g.bracket_basis(split.torus[t], b);
      for (const auto& [k, c] : image) {
        if (k != b) {
          throw Error(ErrorCode::NotDiagonalOnBasis,
                      "ad(" + g.basis()[split.torus[t]] + ") maps " + g.basis()[b] + " onto " + g.basis()[k]);
        }
        table.weights[b][t] = c;
      }
    }
  }
  return table;
}

RootSystem root_system(const LieAlgebra& g, const Vector& regular, const RootSystemOptions& options) {
  const Split& split = require_split(g);
  require_alpha(split, regular);
  verify_torus(g);
  const std::size_t n = g.dim();
  const Vector x = torus_vector(g, split, regular);
  const std::size_t kernel = n - rank(g.ad(x));
  PointSampler sampler(options.seed, 100);
  for (unsigned s = 0; s < options.regularity_samples; ++s) {
    const Vector y = torus_vector(g, split, sampler.point(split.torus.size()));
    const std::size_t k = n - rank(g.ad(y));
    if (k < kernel) {
      throw Error(ErrorCode::NotRegular, "a sampled torus element has kernel dimension " + std::to_string(k) +
                                             " < " + std::to_string(kernel));
    }
  }
  std::size_t replaced = 0;
  while (sgn(regular[replaced]) == 0) ++replaced;
  const std::size_t excluded = split.torus[replaced];

  RootSystem out;
  out.nilradical_dim = split.nilradical.size();
  std::vector<std::size_t> column(n, static_cast<std::size_t>(-1));
  for (std::size_t b = 0; b < n; ++b) {
    if (b == excluded) continue;
    column[b] = out.variables.size();
    out.variables.push_back(b);
  }
  const std::size_t vars = out.variables.size();
  for (const auto& [key, vec] : g.brackets()) {
    const auto [i, j] = key;
    if (i == excluded || j == excluded) continue;
    for (const auto& [k, c] : vec) {
      std::vector<long> row(vars, 0);
      row[column[i]] += 1;
      row[column[j]] += 1;
      row[column[k]] -= 1;
      out.rows.push_back(std::move(row));
    }
  }
  Matrix m(out.rows.size(), vars);
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    for (std::size_t c = 0; c < vars; ++c) m(r, c) = out.rows[r][c];
  }
  out.rank = rank(std::move(m));
  return out;
}

LieAlgebra subtorus_restriction(const LieAlgebra& g, const Vector& alpha) {
  const Split& split = require_split(g);
  require_alpha(split, alpha);
  const std::size_t nil = split.nilradical.size();
  std::vector<std::size_t> position(g.dim(), static_cast<std::size_t>(-1));
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < nil; ++p) {
    position[split.nilradical[p]] = p;
    labels.push_back(g.basis()[split.nilradical[p]]);
  }
  labels.push_back("V");
  auto locate = [&](std::size_t k, const std::string& what) {
    if (position[k] == static_cast<std::size_t>(-1)) {
      throw Error(ErrorCode::NotClosed, what + " has a component on torus vector " + g.basis()[k]);
    }
    return position[k];
  };
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < nil; ++a) {
    for (std::size_t b = a + 1; b < nil; ++b) {
      for (const auto& [k, c] : g.bracket_basis(split.nilradical[a], split.nilradical[b])) {
        entries.push_back({a, b, locate(k, "a nilradical bracket"), c});
      }
    }
  }
  for (std::size_t t = 0; t < split.torus.size(); ++t) {
    if (sgn(alpha[t]) == 0) continue;
    for (std::size_t b = 0; b < nil; ++b) {
      for (const auto& [k, c] : g.bracket_basis(split.torus[t], split.nilradical[b])) {
        entries.push_back({nil, b, locate(k, "a torus action"), alpha[t] * c});
      }
    }
  }
  Split s;
  for (std::size_t p = 0; p < nil; ++p) s.nilradical.push_back(p);
  s.torus.push_back(nil);
  return LieAlgebra::create(g.name() + "/V", nil + 1, std::move(labels), entries, std::move(s));
}

LieAlgebra change_torus_basis(const LieAlgebra& g, const Matrix& t) {
  const Split& split = require_split(g);
  const std::size_t p = split.torus.size();
  if (t.rows() != p || t.cols() != p) {
    throw Error(ErrorCode::DimensionMismatch, "torus change of basis must be " + std::to_string(p) + "x" + std::to_string(p));
  }
  if (rank(t) != p) throw Error(ErrorCode::BadParameters, "torus change of basis is singular");
  std::vector<bool> is_torus(g.dim(), false);
  for (auto v : split.torus) is_torus[v] = true;
  std::vector<BracketEntry> entries;
  for (const auto& [key, vec] : g.brackets()) {
    const auto [i, j] = key;
    if (is_torus[i] || is_torus[j]) continue;
    for (const auto& [k, c] : vec) entries.push_back({i, j, k, c});
  }
  for (std::size_t s = 0; s < p; ++s) {
    for (std::size_t u = 0; u < p; ++u) {
      if (sgn(t(s, u)) == 0) continue;
      for (std::size_t b = 0; b < g.dim(); ++b) {
        if (is_torus[b]) continue;
        for (const auto& [k, c] : g.bracket_basis(split.torus[u], b)) {
          entries.push_back({split.torus[s], b, k, t(s, u) * c});
        }
      }
    }
  }
  return LieAlgebra::create(g.name(), g.dim(), g.basis(), entries, split);
}

Report torus_independence_check(const LieAlgebra& g, std::span<const Function> fns) {
  const Split& split = require_split(g);
  Report report;
  report.command = "torus_independence";
  auto offenders = nlohmann::ordered_json::array();
  for (std::size_t f = 0; f < fns.size(); ++f) {
    for (auto v : split.torus) {
      if (involves(fns[f], v)) offenders.push_back({{"function", f}, {"variable", g.variable_names()[v]}});
    }
  }
  const bool ok = offenders.empty();
  report.add("torus_independence", ok,
             ok ? "no function involves a torus coordinate"
                : std::to_string(offenders.size()) + " torus coordinate occurrences");
  report.data["offenders"] = std::move(offenders);
  return report;
}

Report prop1_check(const LieAlgebra& g, const Vector& alpha, std::span<const Function> fns) {
  const Split& split = require_split(g);
  require_alpha(split, alpha);
  Report report;
  report.command = "prop1";

  const LieAlgebra nil = nilradical_of(g);
  const Subspace z = center(nil);
  const Vector v = torus_vector(g, split, alpha);
  bool acts = false;
  for (const auto& c : z.basis()) {
    Vector lifted(g.dim());
    for (std::size_t p = 0; p < c.size(); ++p) lifted[split.nilradical[p]] = c[p];
    if (!is_zero(bracket(g, v, lifted))) acts = true;
  }
  if (!acts) {
    throw Error(ErrorCode::HypothesisFailed, "the subtorus acts trivially on the center of the nilradical (dim " +
                                                 std::to_string(z.dim()) + ")");
  }
  report.add("hypothesis", true, "subtorus acts nontrivially on the center of the nilradical");

  const LieAlgebra sub = subtorus_restriction(g, alpha);
  std::vector<std::size_t> mapping(g.dim(), Polynomial::npos);
  for (std::size_t p = 0; p < split.nilradical.size(); ++p) mapping[split.nilradical[p]] = p;
  for (std::size_t f = 0; f < fns.size(); ++f) {
    const std::string name = "invariant[" + std::to_string(f) + "]";
    Function moved;
    try {
      moved = remap(fns[f], sub.dim(), mapping);
    } catch (const Error&) {
      report.add(name, false, "involves a torus coordinate, cannot be carried to the subtorus algebra");
      continue;
    }
    const Report r = is_invariant(sub, moved);
    report.add(name, r.passed(), r.passed() ? "invariant on the subtorus algebra" : r.verdicts.front().detail);
  }

  const std::size_t n_r = invariant_count(g);
  const std::size_t n_sub = invariant_count(sub);
  const std::size_t p = split.torus.size();
  report.data["n_r"] = n_r;
  report.data["n_subtorus"] = n_sub;
  report.data["torus_dim"] = p;
  report.add("count", n_sub >= n_r, "N(r') = " + std::to_string(n_sub) + ", N(r) = " + std::to_string(n_r));
  if (p % 2 == 0) {
    report.add("parity", n_sub >= n_r + 1,
               "torus dimension " + std::to_string(p) + " is even; need N(r') >= " + std::to_string(n_r + 1));
  }
  const Report ti = torus_independence_check(g, fns);
  report.add("torus_independence", ti.passed(), ti.verdicts.front().detail);
  return report;
}

}  // namespace lieinv
