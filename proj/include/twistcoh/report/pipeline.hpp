#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/series.hpp"
#include "twistcoh/report/closed_form.hpp"
#include "twistcoh/report/oracle.hpp"
#include "twistcoh/rootsys/root_system.hpp"
#include "twistcoh/twist/automorphism.hpp"
#include "twistcoh/twist/folding.hpp"
#include "twistcoh/weyl/group.hpp"
#include "twistcoh/weyl/molien.hpp"

namespace twistcoh {

inline constexpr int kDefaultTruncation = 50;

// Untwisted cases with a larger Weyl group use the degree table instead of
// enumerating (E7, E8).
inline constexpr unsigned long kEnumerationLimit = 1'000'000;

struct TwistSpec {
  CartanType cartan_type;
  AutomorphismSpec automorphism;
  int truncation = kDefaultTruncation;
  bool run_oracle = false;
  unsigned workers = 1;
  std::size_t element_cap = kDefaultElementCap;
};

struct OracleCheck {
  int max_degree = 0;
  bool agrees = false;
};

struct TwistReport {
  TwistSpec input;
  CartanType folded_type;
  std::string fixed_group_note;
  OrbitCriterion orbit_criterion;
  std::vector<std::size_t> positive_orbit_sizes;
  BigInt wsigma_order;
  BigInt restricted_order;
  BigInt folded_weyl_order;
  bool wsigma_preserves_folded = false;
  bool table_path = false;
  BigradedSeries bigraded;
  GradedSeries series;
  std::optional<ClosedForm> closed_form;
  std::vector<unsigned long> excluded_characteristics;
  std::optional<OracleCheck> oracle;
  // Even SU(n) flip: does the entry-wise conjugation representative
  // (SO(n) with its Z2 outer action) give the same series?
  std::optional<bool> representative_check;
  std::vector<std::string> notes;
};

inline std::vector<unsigned long> prime_divisors(BigInt n) {
  std::vector<unsigned long> primes;
  if (n < 0) n = -n;
  for (unsigned long p = 2; BigInt(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n > 1) primes.push_back(n.get_ui());
  return primes;
}

inline std::vector<RationalMatrix> simple_reflections(const RootSystem& rs) {
  std::vector<RationalMatrix> gens;
  for (const auto& a : rs.simple_roots) gens.push_back(reflection_matrix(a, rs.gram));
  return gens;
}

/// Primes dividing |W|, ord([sigma]) or |pi_0(G^sigma)|, the latter taken
/// over both documented representatives of the outer class.
inline std::vector<unsigned long> excluded_characteristics(const CartanType& t, const FoldingCatalogEntry& cat) {
  std::vector<unsigned long> out;
  auto add = [&](const BigInt& n) {
    for (auto p : prime_divisors(n))
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  add(weyl_order(t));
  add(cat.outer_order);
  add(cat.components_canonical);
  add(cat.components_alternative);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<unsigned long> excluded_characteristics(const TwistSpec& spec) {
  const RootSystem rs = build_root_system(spec.cartan_type);
  return excluded_characteristics(spec.cartan_type, folding_catalog(make_automorphism(rs, spec.automorphism)));
}

/// W(D_m) extended by the orientation-reversing reflection e_m -> -e_m,
/// acting on the maximal torus of SO(2m).
inline FiniteMatrixGroup even_orthogonal_with_outer(int m) {
  const std::size_t n = static_cast<std::size_t>(m);
  std::vector<RationalMatrix> gens;
  auto e = [&](std::size_t i) { return detail::unit(n, i); };
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(reflection_matrix(e(i) - e(i + 1), n));
  gens.push_back(reflection_matrix(e(n - 2) + e(n - 1), n));
  RationalMatrix outer = RationalMatrix::identity(n);
  outer(n - 1, n - 1) = -1;
  gens.push_back(outer);
  return generate_group(gens);
}

/// The full pipeline: root system, sigma, W_sigma as the stabilizer of
/// t^sigma in W, its image on t^sigma, the super-Molien series of that
/// image, criteria, closed form and excluded characteristics.
inline TwistReport compute(const TwistSpec& spec) {
  validate(spec.cartan_type);
  if (spec.truncation < 0) throw InputError("truncation must be non-negative");

  TwistReport rep;
  rep.input = spec;
  const RootSystem rs = build_root_system(spec.cartan_type);
  const DiagramAutomorphism sigma = make_automorphism(rs, spec.automorphism);
  const FoldingCatalogEntry cat = folding_catalog(sigma);
  const FoldingResult fold = folded_root_system(sigma);

  rep.folded_type = fold.folded_type;
  rep.fixed_group_note = cat.fixed_group_note;
  rep.orbit_criterion = orbit_count_criterion(sigma, fold);
  for (const auto& o : orbits_on_positive_roots(sigma)) rep.positive_orbit_sizes.push_back(o.size());
  rep.folded_weyl_order = fold.folded.weyl_order;

  if (rs.weyl_order > kEnumerationLimit) {
    if (!sigma.is_identity())
      throw ResourceCapError("Weyl group of " + rs.cartan_type.to_string() + " is too large to enumerate");
    rep.table_path = true;
    rep.wsigma_order = rs.weyl_order;
    rep.restricted_order = rs.weyl_order;
    rep.wsigma_preserves_folded = true;
    rep.bigraded = bigraded_product_form(rs.degrees, spec.truncation);
    rep.notes.push_back("Weyl group of order " + rs.weyl_order.get_str() +
                        " not enumerated; untwisted series taken from the degree table");
  } else {
    if (rs.weyl_order > spec.element_cap)
      throw ResourceCapError("group too large: |W| = " + rs.weyl_order.get_str() + " exceeds the element cap " +
                             std::to_string(spec.element_cap));
    const FiniteMatrixGroup wsigma = stabilizer_of_generated(simple_reflections(rs), fold.fixed_basis, spec.element_cap);
    const FiniteMatrixGroup image = restrict_to_subspace(wsigma, fold.fixed_basis);
    rep.wsigma_order = static_cast<unsigned long>(wsigma.order());
    rep.restricted_order = static_cast<unsigned long>(image.order());
    rep.wsigma_preserves_folded = wsigma_preserves_folded(image, fold);
    rep.bigraded = super_molien(image, spec.truncation, spec.workers);

    if (spec.run_oracle) {
      if (image.dim() <= kOracleMaxDim) {
        const int top = std::min(spec.truncation, kOracleMaxDegree);
        const BigradedSeries dims = brute_force_invariant_dims(image, top);
        BigradedSeries cut(top);
        for (const auto& [k, v] : rep.bigraded.terms()) cut.set(k.first, k.second, v);
        rep.oracle = OracleCheck{top, dims == cut};
        rep.notes.push_back(std::string("brute-force invariant dimensions up to degree ") + std::to_string(top) +
                            (rep.oracle->agrees ? " agree" : " DISAGREE") + " with the super-Molien series");
      } else {
        rep.notes.push_back("oracle skipped: fixed subspace dimension " + std::to_string(image.dim()) +
                            " exceeds the oracle guard");
      }
    }
  }
  rep.series = cohomological_series(rep.bigraded);

  rep.notes.push_back("restricted W_sigma image has order " + rep.restricted_order.get_str() +
                      (rep.restricted_order == rep.folded_weyl_order ? ", equal to" : ", different from") + " |W(" +
                      rep.folded_type.to_string() + ")| = " + rep.folded_weyl_order.get_str());

  const std::vector<int> candidate = degrees(rep.folded_type);
  if (rep.table_path) {
    rep.closed_form = ClosedForm{candidate};
  } else if (spec.truncation >= required_truncation(candidate)) {
    rep.closed_form = recognize_closed_form(rep.series, candidate);
    if (!rep.closed_form) rep.closed_form = search_closed_form(rep.series);
    if (!rep.closed_form) rep.notes.push_back("no product form recognized at this truncation");
  } else {
    rep.notes.push_back("closed-form recognition against degrees of " + rep.folded_type.to_string() +
                        " needs truncation >= " + std::to_string(required_truncation(candidate)));
  }

  rep.excluded_characteristics = excluded_characteristics(rs.cartan_type, cat);
  rep.notes.push_back("fixed group: " + cat.fixed_group_note);
  rep.notes.push_back("excluded characteristics are the primes dividing |W|, ord([sigma]) = " +
                      std::to_string(cat.outer_order) + " and |pi_0(G^sigma)| (" +
                      std::to_string(cat.components_canonical) + " for the diagram representative, " +
                      std::to_string(cat.components_alternative) + " for the classical matrix representative)");
  rep.notes.push_back(cat.coefficient_note);

  const int n_plus_1 = rs.cartan_type.rank + 1;
  if (rs.cartan_type.family == 'A' && !sigma.is_identity()) {
    rep.notes.push_back("the same series holds for the twisted loop group of U(" + std::to_string(n_plus_1) +
                        ") at characteristics coprime to 2 and " + std::to_string(n_plus_1));
    if (n_plus_1 % 2 == 0) {
      const int m = n_plus_1 / 2;
      const BigradedSeries alt = super_molien(even_orthogonal_with_outer(m), spec.truncation, spec.workers);
      rep.representative_check = cohomological_series(alt) == rep.series;
      rep.notes.push_back("entry-wise conjugation representative (SO(" + std::to_string(n_plus_1) +
                          ") with Z2 outer action on its torus): series " +
                          (*rep.representative_check ? "agrees" : "DISAGREES") + " with the C" +
                          std::to_string(m) + " computation");
    }
  }
  rep.notes.push_back("finite covers and central quotients give the same series at characteristics coprime to the "
                      "order of the kernel");
  return rep;
}

}  // namespace twistcoh
