#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/series.hpp"

namespace twistcoh {

/// Lambda(x_{2d-1} : d) (x) F[y_{2d} : d] over a multiset of degrees d.
struct ClosedForm {
  std::vector<int> degrees;  // the d's, ascending

  std::vector<int> x_degrees() const {
    std::vector<int> x;
    for (int d : degrees) x.push_back(2 * d - 1);
    return x;
  }
  std::vector<int> y_degrees() const {
    std::vector<int> y;
    for (int d : degrees) y.push_back(2 * d);
    return y;
  }

  std::string to_string() const {
    std::string xs, ys;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      xs += (i ? ", x" : "x") + std::to_string(2 * degrees[i] - 1);
      ys += (i ? ", y" : "y") + std::to_string(2 * degrees[i]);
    }
    return "Lambda(" + xs + ") (x) F[" + ys + "]";
  }

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

// Smallest truncation at which a product over `degrees` can be confirmed.
inline int required_truncation(const std::vector<int>& degrees) {
  int top = 0;
  for (int d : degrees) top = std::max(top, d);
  return 2 * (2 * top) + 1;
}

/// Checks series * prod(1 - u^{2d}) == prod(1 + u^{2d-1}) through the
/// truncation. Throws if the truncation is too small to decide.
inline std::optional<ClosedForm> recognize_closed_form(const GradedSeries& series, std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 1; }))
    throw InputError("recognize_closed_form: degrees must be positive");
  const int need = required_truncation(degrees);
  if (series.truncation() < need)
    throw InputError("recognize_closed_form: truncation " + std::to_string(series.truncation()) +
                     " is too small, need at least " + std::to_string(need));
  GradedSeries lhs = series;
  GradedSeries rhs(series.truncation());
  rhs[0] = 1;
  for (int d : degrees) {
    graded_mul_binomial(lhs, 2 * d, -1);
    graded_mul_binomial(rhs, 2 * d - 1, +1);
  }
  if (lhs != rhs) return std::nullopt;
  return ClosedForm{degrees};
}

/// Recovers candidate degrees by peeling factors off the lowest nonzero
/// term, then confirms them with recognize_closed_form. Only degrees that
/// the truncation can confirm are considered; returns nullopt otherwise.
inline std::optional<ClosedForm> search_closed_form(const GradedSeries& series) {
  const int n = series.truncation();
  if (n < 0 || series[0] != 1) return std::nullopt;
  GradedSeries rest = series;
  std::vector<int> found;
  for (;;) {
    int k = 1;
    while (k <= n && rest[k] == 0) ++k;
    if (k > n) break;
    if (k % 2 == 0 || rest[k] < 0) return std::nullopt;
    const int d = (k + 1) / 2;
    if (required_truncation({d}) > n) return std::nullopt;
    const BigInt copies = rest[k];
    for (BigInt c = 0; c < copies; ++c) {
      found.push_back(d);
      graded_mul_binomial(rest, 2 * d, -1);
      graded_div_binomial(rest, 2 * d - 1, +1);
    }
  }
  return recognize_closed_form(series, found);
}

}  // namespace twistcoh
