#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/matrix.hpp"
#include "twistcoh/exact/rational.hpp"

namespace twistcoh {

/// Truncated power series in an exterior variable s and a symmetric
/// variable t with integer coefficients. The term s^a t^b sits in
/// cohomological degree a + 2b; only terms with a + 2b <= truncation are
/// stored, and zero coefficients are never stored.
class BigradedSeries {
 public:
  using Key = std::pair<int, int>;  // (exterior degree a, symmetric degree b)

  BigradedSeries() = default;
  explicit BigradedSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) throw InputError("series truncation must be non-negative");
  }

  static BigradedSeries one(int truncation) {
    BigradedSeries s(truncation);
    s.set(0, 0, BigInt(1));
    return s;
  }

  int truncation() const noexcept { return truncation_; }
  bool in_range(int a, int b) const noexcept { return a >= 0 && b >= 0 && a + 2 * b <= truncation_; }

  BigInt coeff(int a, int b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void set(int a, int b, const BigInt& v) {
    if (!in_range(a, b)) return;
    if (v == 0)
      coeffs_.erase({a, b});
    else
      coeffs_[{a, b}] = v;
  }
  void add_to(int a, int b, const BigInt& v) {
    if (!in_range(a, b) || v == 0) return;
    auto [it, inserted] = coeffs_.try_emplace({a, b}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const std::map<Key, BigInt>& terms() const noexcept { return coeffs_; }

  friend bool operator==(const BigradedSeries& x, const BigradedSeries& y) {
    return x.truncation_ == y.truncation_ && x.coeffs_ == y.coeffs_;
  }

 private:
  int truncation_ = 0;
  std::map<Key, BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const BigradedSeries& s) {
  os << "{";
  bool first = true;
  for (const auto& [k, v] : s.terms()) {
    os << (first ? "" : ", ") << "s^" << k.first << " t^" << k.second << ": " << v;
    first = false;
  }
  return os << "} + O(" << s.truncation() + 1 << ")";
}

inline BigradedSeries series_add(const BigradedSeries& x, const BigradedSeries& y) {
  BigradedSeries r(std::min(x.truncation(), y.truncation()));
  for (const auto& [k, v] : x.terms()) r.add_to(k.first, k.second, v);
  for (const auto& [k, v] : y.terms()) r.add_to(k.first, k.second, v);
  return r;
}

inline BigradedSeries series_scale(const BigradedSeries& x, const BigInt& c) {
  BigradedSeries r(x.truncation());
  for (const auto& [k, v] : x.terms()) r.add_to(k.first, k.second, v * c);
  return r;
}

// Coefficientwise exact division; every coefficient must be divisible.
inline BigradedSeries series_divide_exact(const BigradedSeries& x, const BigInt& d) {
  if (d == 0) throw InputError("series division by zero");
  BigradedSeries r(x.truncation());
  for (const auto& [k, v] : x.terms()) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
      throw InputError("series coefficient at (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                       ") is not divisible by " + d.get_str());
    r.set(k.first, k.second, BigInt(v / d));
  }
  return r;
}

inline BigradedSeries series_mul(const BigradedSeries& x, const BigradedSeries& y) {
  BigradedSeries r(std::min(x.truncation(), y.truncation()));
  for (const auto& [kx, vx] : x.terms())
    for (const auto& [ky, vy] : y.terms()) r.add_to(kx.first + ky.first, kx.second + ky.second, vx * vy);
  return r;
}

namespace detail {

// Power series of num/den in one variable up to degree max_deg, exact.
inline std::vector<Rational> univariate_quotient(const Polynomial& num, const Polynomial& den, int max_deg) {
  if (den.empty() || den[0].is_zero()) throw InputError("rational_function_series: denominator vanishes at 0");
  std::vector<Rational> q(static_cast<std::size_t>(max_deg) + 1);
  const Rational inv0 = den[0].inverse();
  for (int k = 0; k <= max_deg; ++k) {
    Rational acc = static_cast<std::size_t>(k) < num.size() ? num[k] : Rational();
    for (int j = 1; j <= k && static_cast<std::size_t>(j) < den.size(); ++j)
      if (!den[j].is_zero() && !q[k - j].is_zero()) acc -= den[j] * q[k - j];
    q[k] = acc * inv0;
  }
  return q;
}

inline BigInt require_integer(const Rational& q, const char* what) {
  if (!q.is_integer()) throw InputError(std::string(what) + ": non-integral coefficient " + q.to_string());
  return q.numerator();
}

}  // namespace detail

/// Expansion of num(s) / den(t), truncated at cohomological degree
/// `truncation`. The expansion must have integer coefficients.
inline BigradedSeries rational_function_series(const Polynomial& num_s, const Polynomial& den_t, int truncation) {
  BigradedSeries r(truncation);
  const auto q = detail::univariate_quotient(Polynomial{Rational(1)}, den_t, truncation / 2);
  for (std::size_t a = 0; a < num_s.size(); ++a) {
    if (num_s[a].is_zero()) continue;
    for (std::size_t b = 0; b < q.size(); ++b) {
      if (q[b].is_zero()) continue;
      r.add_to(static_cast<int>(a), static_cast<int>(b),
               detail::require_integer(num_s[a] * q[b], "rational_function_series"));
    }
  }
  return r;
}

/// Single-graded series c_0 + c_1 u + ... + c_N u^N with N = truncation.
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(int truncation) : coeffs_(static_cast<std::size_t>(truncation) + 1) {
    if (truncation < 0) throw InputError("series truncation must be non-negative");
  }
  GradedSeries(int truncation, std::vector<BigInt> coeffs) : GradedSeries(truncation) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
  BigInt& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

inline GradedSeries graded_mul(const GradedSeries& x, const GradedSeries& y) {
  const int n = std::min(x.truncation(), y.truncation());
  GradedSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      if (y[j] != 0) r[i + j] += x[i] * y[j];
  }
  return r;
}

// Multiply by (1 + sign * u^k) in place.
inline void graded_mul_binomial(GradedSeries& x, int k, int sign) {
  for (int i = x.truncation(); i >= k; --i) {
    if (sign > 0)
      x[i] += x[i - k];
    else
      x[i] -= x[i - k];
  }
}

// Divide by (1 + sign * u^k) in place; exact as power series.
inline void graded_div_binomial(GradedSeries& x, int k, int sign) {
  for (int i = k; i <= x.truncation(); ++i) {
    if (sign > 0)
      x[i] -= x[i - k];
    else
      x[i] += x[i - k];
  }
}

/// prod_d (1 + u^{2d-1}) / (1 - u^{2d}) truncated at `truncation`.
inline GradedSeries product_form(const std::vector<int>& degrees, int truncation) {
  GradedSeries r(truncation);
  r[0] = 1;
  for (int d : degrees) {
    graded_mul_binomial(r, 2 * d - 1, +1);
    graded_div_binomial(r, 2 * d, -1);
  }
  return r;
}

/// Bigraded product prod_d (1 + s t^{d-1}) / (1 - t^d).
inline BigradedSeries bigraded_product_form(const std::vector<int>& degrees, int truncation) {
  BigradedSeries r = BigradedSeries::one(truncation);
  for (int d : degrees) {
    BigradedSeries factor(truncation);
    // (1 + s t^{d-1}) * sum_k t^{dk}
    for (int k = 0; 2 * d * k <= truncation; ++k) {
      factor.add_to(0, d * k, BigInt(1));
      factor.add_to(1, d * k + d - 1, BigInt(1));
    }
    r = series_mul(r, factor);
  }
  return r;
}

/// Collapse (a, b) to cohomological degree a + 2b: substitute s -> u, t -> u^2.
inline GradedSeries cohomological_series(const BigradedSeries& s) {
  GradedSeries r(s.truncation());
  for (const auto& [k, v] : s.terms()) r[static_cast<std::size_t>(k.first + 2 * k.second)] += v;
  return r;
}

inline std::string to_string(const GradedSeries& s);

inline std::ostream& operator<<(std::ostream& os, const GradedSeries& s) { return os << to_string(s); }

inline std::string to_string(const GradedSeries& s) {
  std::string out;
  for (int i = 0; i <= s.truncation(); ++i) {
    if (s[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += s[i].get_str();
    if (i == 1) out += "*u";
    if (i > 1) out += "*u^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace twistcoh
