#pragma once

#include <algorithm>
#include <thread>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/series.hpp"
#include "twistcoh/weyl/group.hpp"

namespace twistcoh {

/// Bigraded Poincare series of (Lambda(V*) (x) S(V*))^G:
///
///   P(s, t) = 1/|G| * sum_g det(1 + s g) / det(1 - t g).
///
/// Both determinants depend only on the characteristic polynomial, so the
/// sum runs over charpoly buckets weighted by multiplicity. Buckets are
/// split across `workers` threads; partial sums are integers, so the result
/// does not depend on the split.
inline BigradedSeries super_molien(const FiniteMatrixGroup& g, int truncation, unsigned workers = 1) {
  if (truncation < 0) throw InputError("super_molien: negative truncation");
  if (g.order() == 0) throw InputError("super_molien: empty group");

  std::vector<const std::pair<const Polynomial, std::uint64_t>*> buckets;
  for (const auto& b : g.charpoly_buckets()) buckets.push_back(&b);

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(buckets.size())));
  std::vector<BigradedSeries> partial(workers, BigradedSeries(truncation));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < buckets.size(); i += workers) {
      const auto& [cp, mult] = *buckets[i];
      const auto [num, den] = dets_from_charpoly(cp);
      BigradedSeries term = rational_function_series(num, den, truncation);
      partial[w] = series_add(partial[w], series_scale(term, BigInt(static_cast<unsigned long>(mult))));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  BigradedSeries total(truncation);
  for (const auto& p : partial) total = series_add(total, p);
  return series_divide_exact(total, BigInt(static_cast<unsigned long>(g.order())));
}

}  // namespace twistcoh
