#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lieinv/algebra.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/polynomial.hpp"

namespace lieinv::test {

inline Function expr(const LieAlgebra& g, const std::string& src) { return parse_expr(src, g); }

inline RationalExpr rational(const LieAlgebra& g, const std::string& src) {
  return std::get<RationalExpr>(parse_expr(src, g));
}

inline Polynomial poly(const LieAlgebra& g, const std::string& src) {
  const auto r = rational(g, src);
  return r.numerator() * (Scalar(1) / r.denominator().constant_term());
}

// Plain fraction Gaussian elimination, independent of the library's linalg.
inline std::size_t oracle_rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Leibniz expansion over all permutations.
inline Scalar oracle_det(const std::vector<std::vector<Scalar>>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    Scalar term = 1;
    for (std::size_t i = 0; i < m.size(); ++i) term *= m[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    total += inversions % 2 ? Scalar(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Jacobi sum [[a,b],c] + [[b,c],a] + [[c,a],b] through the bilinear bracket.
inline Vector jacobi_sum(const LieAlgebra& g, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n = g.dim();
  const Vector ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
  Vector s = bracket(g, bracket(g, ea, eb), ec);
  const Vector t = bracket(g, bracket(g, eb, ec), ea);
  const Vector u = bracket(g, bracket(g, ec, ea), eb);
  for (std::size_t i = 0; i < n; ++i) s[i] += t[i] + u[i];
  return s;
}

}  // namespace lieinv::test
