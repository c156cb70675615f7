#pragma once

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/matrix.hpp"
#include "twistcoh/exact/series.hpp"
#include "twistcoh/weyl/group.hpp"

namespace twistcoh {

inline constexpr std::size_t kOracleMaxDim = 4;
inline constexpr int kOracleMaxDegree = 12;

namespace detail {

using Exponent = std::vector<int>;

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Exponent> monomials(std::size_t n, int degree) {
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == n) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  if (n == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

inline Rational minor_det(const RationalMatrix& g, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  RationalMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = g(rows[i], cols[j]);
  // Gaussian elimination determinant.
  Rational det(1);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m(p, c).is_zero()) ++p;
    if (p == k) return Rational();
    if (p != c) {
      for (std::size_t j = 0; j < k; ++j) m(p, j).swap(m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < k; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t j = c; j < k; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Image of prod_i y_i^{e_i} under y_i -> sum_j g(i,j) y_j.
inline std::map<Exponent, Rational> symmetric_image(const RationalMatrix& g, const Exponent& e) {
  const std::size_t n = e.size();
  std::map<Exponent, Rational> poly{{Exponent(n, 0), Rational(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    for (int rep = 0; rep < e[i]; ++rep) {
      std::map<Exponent, Rational> next;
      for (const auto& [mono, c] : poly) {
        for (std::size_t j = 0; j < n; ++j) {
          if (g(i, j).is_zero()) continue;
          Exponent m = mono;
          ++m[j];
          next[m] += c * g(i, j);
        }
      }
      poly = std::move(next);
    }
  }
  return poly;
}

// Matrix of g acting on Lambda^a (x) S^b in the monomial basis (columns are images).
inline RationalMatrix induced_action(const RationalMatrix& g, const std::vector<std::vector<std::size_t>>& ext,
                                     const std::vector<Exponent>& sym) {
  std::map<Exponent, std::size_t> sym_index;
  for (std::size_t i = 0; i < sym.size(); ++i) sym_index[sym[i]] = i;
  const std::size_t n = ext.size() * sym.size();
  RationalMatrix rho(n, n);
  for (std::size_t ei = 0; ei < ext.size(); ++ei) {
    std::vector<Rational> ext_col(ext.size());
    for (std::size_t ej = 0; ej < ext.size(); ++ej) ext_col[ej] = minor_det(g, ext[ei], ext[ej]);
    for (std::size_t si = 0; si < sym.size(); ++si) {
      const auto img = symmetric_image(g, sym[si]);
      const std::size_t col = ei * sym.size() + si;
      for (std::size_t ej = 0; ej < ext.size(); ++ej) {
        if (ext_col[ej].is_zero()) continue;
        for (const auto& [mono, c] : img) {
          if (c.is_zero()) continue;
          rho(ej * sym.size() + sym_index.at(mono), col) += ext_col[ej] * c;
        }
      }
    }
  }
  return rho;
}

// Greedy generating set: keep an element when it is outside the subgroup
// generated so far.
inline std::vector<RationalMatrix> small_generating_set(const FiniteMatrixGroup& g) {
  std::vector<RationalMatrix> gens;
  std::unordered_set<std::string> span{RationalMatrix::identity(g.dim()).encoding()};
  for (const auto& x : g.elements()) {
    if (span.count(x.encoding())) continue;
    gens.push_back(x);
    span.clear();
    for_each_group_element(
        gens, [&](const RationalMatrix& y) { span.insert(y.encoding()); }, g.order() + 1, g.dim());
    if (span.size() == g.order()) break;
  }
  return gens;
}

}  // namespace detail

/// Dimensions of the G-invariants of Lambda^a(V*) (x) S^b(V*) for every
/// (a, b) with a + 2b <= max_total_degree, by exact linear algebra: build
/// each generator's action on the monomial basis and intersect the fixed
/// spaces. Independent of characters and of the Molien formula.
inline BigradedSeries brute_force_invariant_dims(const FiniteMatrixGroup& g, int max_total_degree) {
  if (g.dim() > kOracleMaxDim || max_total_degree > kOracleMaxDegree || max_total_degree < 0)
    throw ResourceCapError("oracle guard: needs dim <= " + std::to_string(kOracleMaxDim) + " and degree <= " +
                           std::to_string(kOracleMaxDegree));
  const auto gens = detail::small_generating_set(g);
  BigradedSeries out(max_total_degree);
  for (std::size_t a = 0; a <= g.dim(); ++a) {
    const auto ext = detail::subsets(g.dim(), a);
    for (int b = 0; static_cast<int>(a) + 2 * b <= max_total_degree; ++b) {
      const auto sym = detail::monomials(g.dim(), b);
      const std::size_t n = ext.size() * sym.size();
      // Columns of `basis` span the joint fixed space found so far.
      RationalMatrix basis = RationalMatrix::identity(n);
      for (const auto& x : gens) {
        if (basis.cols() == 0) break;
        const RationalMatrix rho = detail::induced_action(x, ext, sym);
        const auto c = kernel((rho - RationalMatrix::identity(n)) * basis);
        basis = basis * RationalMatrix::from_columns(c, basis.cols());
      }
      out.set(static_cast<int>(a), b, BigInt(static_cast<unsigned long>(basis.cols())));
    }
  }
  return out;
}

}  // namespace twistcoh
