#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/rootsys/root_system.hpp"
#include "twistcoh/twist/automorphism.hpp"
#include "twistcoh/weyl/group.hpp"

namespace twistcoh {

/// Classical folding table and fixed-group metadata for one twist.
struct FoldingCatalogEntry {
  CartanType folded_type;
  int outer_order = 1;                 // order of [sigma] in Out(G)
  int components_canonical = 1;        // |pi_0(G^sigma)|, diagram-automorphism representative
  int components_alternative = 1;      // |pi_0(G^sigma)|, classical matrix representative
  std::string fixed_group_note;
  std::string coefficient_note;        // per-family hypothesis on the coefficient field
};

inline FoldingCatalogEntry folding_catalog(const DiagramAutomorphism& a) {
  const CartanType t = a.base.cartan_type;
  const int n = t.rank;
  FoldingCatalogEntry e;
  e.outer_order = a.order;
  if (a.is_identity()) {
    e.folded_type = t;
    e.fixed_group_note = "untwisted: G^sigma = G is connected";
    e.coefficient_note = "untwisted case: isomorphism holds when H^*(G; Z) has no p-torsion, e.g. p coprime to |W|";
    return e;
  }
  if (t.family == 'A' && a.order == 2) {
    const int m = (n + 1) / 2;
    const bool even = (n + 1) % 2 == 0;
    e.folded_type = make_cartan_type(even ? 'C' : 'B', m);
    e.fixed_group_note = even ? "canonical representative: G^sigma = Sp(" + std::to_string(m) +
                                    ") (type C" + std::to_string(m) + "); entry-wise conjugation representative: SO(" +
                                    std::to_string(n + 1) + ") (type D" + std::to_string(m) +
                                    ") with Z2 acting by an orientation-reversing change of basis"
                              : "canonical representative: G^sigma = SO(" + std::to_string(n + 1) + ") (type B" +
                                    std::to_string(m) + "); entry-wise conjugation gives the same fixed group";
    e.coefficient_note = "SU(" + std::to_string(n + 1) + ") with complex conjugation: per-family hypothesis is characteristic coprime to " +
                         std::to_string(n + 1) + "!";
    return e;
  }
  if (t.family == 'D' && a.order == 2) {
    e.folded_type = make_cartan_type('B', n - 1);
    e.components_canonical = 2;
    e.components_alternative = 2;
    e.fixed_group_note = "G^sigma = O(" + std::to_string(2 * n - 1) + "), identity component SO(" +
                         std::to_string(2 * n - 1) + ") (type B" + std::to_string(n - 1) + "), two components";
    e.coefficient_note = "SO(" + std::to_string(2 * n) + ") orientation-reversing twist: per-family hypothesis is odd characteristic coprime to " +
                         std::to_string(n) + "!";
    return e;
  }
  if (t.family == 'D' && n == 4 && a.order == 3) {
    e.folded_type = make_cartan_type('G', 2);
    e.fixed_group_note = "G^sigma = G2, the automorphism group of the octonions (connected)";
    e.coefficient_note = "SO(8) triality: per-family hypothesis is characteristic coprime to 6";
    return e;
  }
  if (t.family == 'E' && n == 6 && a.order == 2) {
    e.folded_type = make_cartan_type('F', 4);
    e.fixed_group_note = "G^sigma = F4 (connected)";
    e.coefficient_note = "E6 outer involution: per-family hypothesis is characteristic greater than 30, "
                         "stronger than the uniform prime set";
    return e;
  }
  throw InputError("no folding catalog entry for this automorphism of " + t.to_string());
}

/// Result of folding a root system along a diagram automorphism.
///
/// `folded` is Phi_sigma realized in fixed-subspace coordinates with the
/// induced inner product; it consists of the indivisible elements of
/// pi(Phi), so each folded root lies in pi(Phi) with scale factor 1.
struct FoldingResult {
  SubspaceBasis fixed_basis;
  std::vector<WeightedVector> projected_roots;
  RootSystem folded;
  CartanType folded_type;
};

namespace detail {

inline std::string vec_key(const RationalVector& v) { return RationalMatrix(1, v.size(), v).encoding(); }

// Permutation q with target[i][j] == c[q[i]][q[j]], if any.
inline std::optional<std::vector<std::size_t>> match_cartan(const std::vector<std::vector<int>>& c,
                                                            const std::vector<std::vector<int>>& target) {
  const std::size_t r = c.size();
  if (target.size() != r) return std::nullopt;
  std::vector<std::size_t> q(r);
  std::iota(q.begin(), q.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) ok = target[i][j] == c[q[i]][q[j]];
    if (ok) return q;
  } while (std::next_permutation(q.begin(), q.end()));
  return std::nullopt;
}

}  // namespace detail

inline FoldingResult folded_root_system(const DiagramAutomorphism& a) {
  const FoldingCatalogEntry cat = folding_catalog(a);
  FoldingResult f;
  f.fixed_basis = fixed_subspace(a);
  f.projected_roots = project_roots(a, f.fixed_basis);
  f.folded_type = cat.folded_type;

  std::unordered_set<std::string> projected;
  for (const auto& w : f.projected_roots) projected.insert(detail::vec_key(w.vector));
  auto indivisible = [&](const RationalVector& v) { return !projected.count(detail::vec_key(Rational(1, 2) * v)); };

  // Positive folded roots are the indivisible images of positive roots.
  std::vector<RationalVector> positive;
  std::unordered_set<std::string> positive_keys;
  std::unordered_set<std::string> folded_keys;
  for (std::size_t i = 0; i < a.base.roots.size(); ++i) {
    RationalVector c = f.fixed_basis.coordinates(average_over_orbit(a, a.base.roots[i]));
    if (!indivisible(c)) continue;
    const std::string key = detail::vec_key(c);
    folded_keys.insert(key);
    if (i < a.base.num_positive() && positive_keys.insert(key).second) positive.push_back(std::move(c));
  }

  std::vector<RationalVector> simple;
  for (const auto& b : positive) {
    bool decomposable = false;
    for (std::size_t i = 0; i < positive.size() && !decomposable; ++i)
      if (positive_keys.count(detail::vec_key(b - positive[i]))) decomposable = true;
    if (!decomposable) simple.push_back(b);
  }

  const RationalMatrix gram_v = f.fixed_basis.dim() == 0
                                    ? RationalMatrix(0, 0)
                                    : f.fixed_basis.matrix().transpose() * a.base.gram * f.fixed_basis.matrix();
  if (simple.size() != static_cast<std::size_t>(cat.folded_type.rank) || simple.size() != f.fixed_basis.dim())
    throw std::logic_error("folded rank does not match catalog type " + cat.folded_type.to_string());

  std::vector<std::vector<int>> c(simple.size(), std::vector<int>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) {
      const Rational v = Rational(2) * dot(simple[i], gram_v * simple[j]) / dot(simple[j], gram_v * simple[j]);
      if (!v.is_integer()) throw std::logic_error("folded simple roots are not crystallographic");
      c[i][j] = static_cast<int>(mpz_get_si(v.numerator().get_mpz_t()));
    }
  const auto q = detail::match_cartan(c, build_root_system(cat.folded_type).cartan_matrix);
  if (!q) throw std::logic_error("folded Cartan matrix does not match catalog type " + cat.folded_type.to_string());
  std::vector<RationalVector> ordered;
  for (std::size_t i : *q) ordered.push_back(simple[i]);

  f.folded = root_system_from_simple_roots(cat.folded_type, std::move(ordered), gram_v);
  if (f.folded.roots.size() != folded_keys.size())
    throw std::logic_error("folded root count does not match catalog type " + cat.folded_type.to_string());
  for (const auto& r : f.folded.roots)
    if (!folded_keys.count(detail::vec_key(r))) throw std::logic_error("folded root outside pi(Phi)");
  return f;
}

/// For each folded root b, the least c in {1, 2} with c*b in pi(Phi).
inline std::vector<int> containment_scales(const FoldingResult& f) {
  std::unordered_set<std::string> projected;
  for (const auto& w : f.projected_roots) projected.insert(detail::vec_key(w.vector));
  std::vector<int> scales;
  for (const auto& r : f.folded.roots) {
    if (projected.count(detail::vec_key(r)))
      scales.push_back(1);
    else if (projected.count(detail::vec_key(Rational(2) * r)))
      scales.push_back(2);
    else
      throw std::logic_error("folded root not contained in pi(Phi) up to scale");
  }
  return scales;
}

struct OrbitCriterion {
  std::size_t orbit_count = 0;
  std::size_t folded_root_count = 0;
  bool holds = false;
};

/// Compares the number of sigma-orbits on Phi with |Phi_sigma|. A false
/// result only means the counting shortcut is inconclusive.
inline OrbitCriterion orbit_count_criterion(const DiagramAutomorphism& a, const FoldingResult& f) {
  OrbitCriterion c;
  c.orbit_count = orbits_on_roots(a).size();
  c.folded_root_count = f.folded.roots.size();
  c.holds = c.orbit_count == c.folded_root_count;
  return c;
}

inline OrbitCriterion orbit_count_criterion(const DiagramAutomorphism& a) {
  return orbit_count_criterion(a, folded_root_system(a));
}

/// True iff every element of the restricted group permutes Phi_sigma.
inline bool wsigma_preserves_folded(const FiniteMatrixGroup& restricted, const FoldingResult& f) {
  if (restricted.dim() != f.fixed_basis.dim()) throw InputError("restricted group does not act on the fixed subspace");
  for (const auto& g : restricted.elements())
    for (const auto& r : f.folded.roots)
      if (!f.folded.contains(g * r)) return false;
  return true;
}

inline bool wsigma_preserves_folded(const DiagramAutomorphism&, const FiniteMatrixGroup& restricted,
                                    const FoldingResult& f) {
  return wsigma_preserves_folded(restricted, f);
}

}  // namespace twistcoh
