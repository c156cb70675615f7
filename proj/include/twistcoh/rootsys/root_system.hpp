#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/matrix.hpp"
#include "twistcoh/rootsys/cartan_type.hpp"

namespace twistcoh {

/// A reduced root system realized in a rational ambient space.
///
/// `roots` lists the positive roots (ordered by height, then by simple-root
/// coordinates) followed by their negatives in the same order, so
/// `roots[i + N]` is `-roots[i]` with N = number of positive roots.
/// `coords[i]` holds the integer coordinates of `roots[i]` over the simple
/// roots. The inner product is x^T gram y.
struct RootSystem {
  CartanType cartan_type;
  std::size_t ambient_dim = 0;
  RationalMatrix gram;
  std::vector<RationalVector> roots;
  std::vector<RationalVector> simple_roots;
  std::vector<std::vector<int>> coords;
  std::vector<std::vector<int>> cartan_matrix;
  BigInt weyl_order;
  std::vector<int> degrees;

  std::size_t rank() const noexcept { return simple_roots.size(); }
  std::size_t num_positive() const noexcept { return roots.size() / 2; }

  Rational inner(const RationalVector& x, const RationalVector& y) const { return dot(x, gram * y); }

  std::optional<std::size_t> index_of(const RationalVector& v) const {
    auto it = index_.find(RationalMatrix(1, v.size(), v).encoding());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const RationalVector& v) const { return index_of(v).has_value(); }

  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < roots.size(); ++i) index_[RationalMatrix(1, roots[i].size(), roots[i]).encoding()] = i;
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

inline std::vector<RationalVector> positive_roots(const RootSystem& rs) {
  return {rs.roots.begin(), rs.roots.begin() + static_cast<std::ptrdiff_t>(rs.num_positive())};
}

namespace detail {

inline RationalVector unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  RationalVector v(dim);
  v[i] = c;
  return v;
}

inline std::vector<RationalVector> standard_simple_roots(const CartanType& t, std::size_t& ambient) {
  const int n = t.rank;
  const Rational half(1, 2);
  std::vector<RationalVector> s;
  auto e = [&](int i) { return unit(ambient, static_cast<std::size_t>(i - 1)); };
  switch (t.family) {
    case 'A':
      ambient = static_cast<std::size_t>(n + 1);
      for (int i = 1; i <= n; ++i) s.push_back(e(i) - e(i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      ambient = static_cast<std::size_t>(n);
      for (int i = 1; i < n; ++i) s.push_back(e(i) - e(i + 1));
      if (t.family == 'B') s.push_back(e(n));
      if (t.family == 'C') s.push_back(Rational(2) * e(n));
      if (t.family == 'D') s.push_back(e(n - 1) + e(n));
      break;
    case 'G':
      ambient = 3;
      s.push_back(e(1) - e(2));
      s.push_back(e(2) + e(3) - Rational(2) * e(1));
      break;
    case 'F':
      ambient = 4;
      s.push_back(e(2) - e(3));
      s.push_back(e(3) - e(4));
      s.push_back(e(4));
      s.push_back(half * (e(1) - e(2) - e(3) - e(4)));
      break;
    case 'E': {
      ambient = 8;
      RationalVector a1(8, -half);
      a1[0] = half;
      a1[7] = half;
      s.push_back(a1);
      s.push_back(e(1) + e(2));
      s.push_back(e(2) - e(1));
      for (int i = 3; i < n; ++i) s.push_back(e(i) - e(i - 1));
      break;
    }
    default:
      throw InputError("unsupported family");
  }
  return s;
}

}  // namespace detail

/// Builds the root system generated by `simple` under the inner product
/// `gram`, and checks it against the classical tables for `t`.
///
/// All roots are produced as Weyl orbits of the simple roots, computed in
/// integer simple-root coordinates via the Cartan matrix.
inline RootSystem root_system_from_simple_roots(const CartanType& t, std::vector<RationalVector> simple,
                                                RationalMatrix gram) {
  validate(t);
  const std::size_t r = simple.size();
  if (r != static_cast<std::size_t>(t.rank))
    throw InputError("expected " + std::to_string(t.rank) + " simple roots for " + t.to_string());
  const std::size_t dim = gram.rows();
  for (const auto& a : simple)
    if (a.size() != dim) throw InputError("simple root has wrong ambient dimension");

  RootSystem rs;
  rs.cartan_type = t;
  rs.ambient_dim = dim;
  rs.gram = std::move(gram);
  rs.simple_roots = std::move(simple);

  rs.cartan_matrix.assign(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Rational ajj_i = rs.inner(rs.simple_roots[i], rs.simple_roots[i]);
    if (ajj_i.sign() <= 0) throw InputError("simple root with non-positive norm");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Rational c = Rational(2) * rs.inner(rs.simple_roots[i], rs.simple_roots[j]) /
                         rs.inner(rs.simple_roots[j], rs.simple_roots[j]);
      if (!c.is_integer()) throw InputError("simple roots do not form a crystallographic base");
      const long v = mpz_get_si(c.numerator().get_mpz_t());
      if (i == j ? v != 2 : (v > 0 || v < -3)) throw InputError("simple roots give an invalid Cartan matrix");
      rs.cartan_matrix[i][j] = static_cast<int>(v);
    }
  }

  // Weyl orbits of simple roots; s_i(b) = b - <b, a_i^vee> a_i.
  std::map<std::vector<int>, bool> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    seen[c] = true;
    queue.push_back(c);
  }
  const std::size_t cap = 4 * static_cast<std::size_t>(classical_root_count(t)) + 16;
  while (!queue.empty()) {
    std::vector<int> b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < r; ++j) pairing += b[j] * rs.cartan_matrix[j][i];
      if (pairing == 0) continue;
      std::vector<int> img = b;
      img[i] -= pairing;
      if (seen.emplace(img, true).second) {
        if (seen.size() > cap) throw InputError("simple roots generate an infinite or oversized root set");
        queue.push_back(std::move(img));
      }
    }
  }

  std::vector<std::vector<int>> positive;
  for (const auto& [c, _] : seen) {
    const bool all_nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    const bool all_nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!all_nonneg && !all_nonpos) throw std::logic_error("root with mixed-sign simple coordinates");
    if (all_nonneg) positive.push_back(c);
  }
  std::stable_sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x < y;
  });
  if (2 * positive.size() != seen.size()) throw std::logic_error("root set not closed under negation");

  auto to_ambient = [&](const std::vector<int>& c) {
    RationalVector v(dim);
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0) v = v + Rational(c[i]) * rs.simple_roots[i];
    return v;
  };
  for (const auto& c : positive) {
    rs.coords.push_back(c);
    rs.roots.push_back(to_ambient(c));
  }
  for (const auto& c : positive) {
    std::vector<int> neg(c.size());
    std::transform(c.begin(), c.end(), neg.begin(), [](int x) { return -x; });
    rs.coords.push_back(neg);
    rs.roots.push_back(to_ambient(neg));
  }
  rs.rebuild_index();

  if (static_cast<int>(rs.roots.size()) != classical_root_count(t))
    throw InputError("root count " + std::to_string(rs.roots.size()) + " does not match type " + t.to_string());
  rs.weyl_order = weyl_order(t);
  rs.degrees = degrees(t);
  BigInt prod = 1;
  for (int d : rs.degrees) prod *= d;
  if (prod != rs.weyl_order) throw std::logic_error("degree table inconsistent with Weyl order for " + t.to_string());
  return rs;
}

/// Standard realization: A_n in the sum-zero hyperplane of (n+1)-space,
/// B/C/D in n-space, G2 in the sum-zero plane of 3-space, F4 in 4-space,
/// E6-E8 in 8-space. Simple roots follow the Bourbaki numbering.
inline RootSystem build_root_system(const CartanType& t) {
  validate(t);
  std::size_t ambient = 0;
  auto simple = detail::standard_simple_roots(t, ambient);
  return root_system_from_simple_roots(t, std::move(simple), RationalMatrix::identity(ambient));
}

/// Cartan matrix of a type's standard realization.
inline std::vector<std::vector<int>> cartan_matrix(const CartanType& t) { return build_root_system(t).cartan_matrix; }

}  // namespace twistcoh
