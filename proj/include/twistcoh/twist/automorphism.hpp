#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/matrix.hpp"
#include "twistcoh/rootsys/root_system.hpp"
#include "twistcoh/weyl/group.hpp"

namespace twistcoh {

enum class AutoKind { identity, flip, triality, triality2, permutation };

/// Which diagram automorphism to build. `perm` is only used for
/// AutoKind::permutation and holds 1-based images of the simple roots.
struct AutomorphismSpec {
  AutoKind kind = AutoKind::identity;
  std::vector<int> perm;

  std::string to_string() const {
    switch (kind) {
      case AutoKind::identity: return "identity";
      case AutoKind::flip: return "flip";
      case AutoKind::triality: return "triality";
      case AutoKind::triality2: return "triality2";
      case AutoKind::permutation: break;
    }
    std::string s = "perm=";
    for (std::size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm[i]);
    return s;
  }
};

inline AutomorphismSpec parse_automorphism_spec(const std::string& s) {
  if (s == "identity") return {AutoKind::identity, {}};
  if (s == "flip") return {AutoKind::flip, {}};
  if (s == "triality") return {AutoKind::triality, {}};
  if (s == "triality2") return {AutoKind::triality2, {}};
  if (s.rfind("perm=", 0) == 0) {
    AutomorphismSpec spec{AutoKind::permutation, {}};
    std::stringstream ss(s.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        spec.perm.push_back(std::stoi(item, &used));
        if (used != item.size()) throw InputError("bad");
      } catch (const std::exception&) {
        throw InputError("cannot parse permutation entry '" + item + "'");
      }
    }
    if (spec.perm.empty()) throw InputError("empty permutation");
    return spec;
  }
  throw InputError("unknown automorphism '" + s + "' (expected identity, flip, triality, triality2, perm=...)");
}

/// A diagram automorphism together with its linear extension to the ambient
/// space. `simple_perm[i]` is the 0-based index of the image of simple root i.
struct DiagramAutomorphism {
  RootSystem base;
  std::vector<int> simple_perm;
  RationalMatrix matrix;
  int order = 1;

  bool is_identity() const { return order == 1; }
};

namespace detail {

inline std::vector<int> spec_permutation(const RootSystem& rs, const AutomorphismSpec& spec) {
  const CartanType t = rs.cartan_type;
  const int n = t.rank;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  switch (spec.kind) {
    case AutoKind::identity:
      return p;
    case AutoKind::flip:
      if (t.family == 'A' && n >= 2) {
        for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
      } else if (t.family == 'D') {
        std::swap(p[n - 2], p[n - 1]);
      } else if (t.family == 'E' && n == 6) {
        p = {5, 1, 4, 3, 2, 0};
      } else {
        throw InputError(t.to_string() + " has no diagram flip");
      }
      return p;
    case AutoKind::triality:
    case AutoKind::triality2:
      if (!(t.family == 'D' && n == 4)) throw InputError("triality exists only for D4");
      // a1 -> a3 -> a4 -> a1, a2 fixed
      p = {2, 1, 3, 0};
      if (spec.kind == AutoKind::triality2) p = {3, 1, 0, 2};
      return p;
    case AutoKind::permutation:
      break;
  }
  if (spec.perm.size() != static_cast<std::size_t>(n))
    throw InputError("permutation must have " + std::to_string(n) + " entries for " + t.to_string());
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const int img = spec.perm[i];
    if (img < 1 || img > n || hit[img - 1]) throw InputError("perm= is not a permutation of 1.." + std::to_string(n));
    hit[img - 1] = true;
    p[i] = img - 1;
  }
  return p;
}

// Orthogonal complement of span(roots) with respect to the gram form.
inline std::vector<RationalVector> root_span_complement(const RootSystem& rs) {
  RationalMatrix rows(rs.rank(), rs.ambient_dim);
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const RationalVector g = rs.gram * rs.simple_roots[i];
    for (std::size_t j = 0; j < rs.ambient_dim; ++j) rows(i, j) = g[j];
  }
  return kernel(rows);
}

}  // namespace detail

/// Builds the automorphism and validates it against the root system.
///
/// The linear extension sends simple root i to simple root p(i) and fixes
/// the orthogonal complement of the root span, except for the type A flip,
/// which uses the coordinate formula e_i -> -e_{n+1-i} on the full ambient
/// space (so e_i - e_j -> e_{n+1-j} - e_{n+1-i}).
inline DiagramAutomorphism make_automorphism(const RootSystem& rs, const AutomorphismSpec& spec) {
  DiagramAutomorphism a;
  a.base = rs;
  a.simple_perm = detail::spec_permutation(rs, spec);
  const std::size_t r = rs.rank();
  const auto& p = a.simple_perm;

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (rs.cartan_matrix[p[i]][p[j]] != rs.cartan_matrix[i][j])
        throw InputError("permutation is not a symmetry of the " + rs.cartan_type.to_string() + " Dynkin diagram");

  const bool trivial = std::is_sorted(p.begin(), p.end());
  const std::size_t n = rs.ambient_dim;
  if (trivial) {
    a.matrix = RationalMatrix::identity(n);
  } else if (rs.cartan_type.family == 'A') {
    a.matrix = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) a.matrix(n - 1 - i, i) = -1;
  } else {
    std::vector<RationalVector> src = rs.simple_roots, dst;
    for (std::size_t i = 0; i < r; ++i) dst.push_back(rs.simple_roots[p[i]]);
    for (auto& c : detail::root_span_complement(rs)) {
      src.push_back(c);
      dst.push_back(c);
    }
    a.matrix = RationalMatrix::from_columns(dst, n) * inverse(RationalMatrix::from_columns(src, n));
  }

  for (std::size_t i = 0; i < r; ++i)
    if (a.matrix * rs.simple_roots[i] != rs.simple_roots[p[i]])
      throw std::logic_error("linear extension does not realize the simple-root permutation");

  std::unordered_set<std::size_t> images;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const auto j = rs.index_of(a.matrix * rs.roots[i]);
    if (!j) throw InputError("automorphism does not preserve the root set");
    if (i < rs.num_positive() && *j >= rs.num_positive())
      throw InputError("automorphism does not preserve the positive system");
    images.insert(*j);
  }
  if (images.size() != rs.roots.size()) throw InputError("automorphism is not a bijection on roots");

  RationalMatrix power = a.matrix;
  a.order = 1;
  while (!power.is_identity()) {
    power = power * a.matrix;
    if (++a.order > 12) throw std::logic_error("diagram automorphism of unexpected order");
  }
  return a;
}

/// sigma-orbits on the root set as lists of root indices, each orbit
/// starting at its smallest index; orbits ordered by that index.
inline std::vector<std::vector<std::size_t>> orbits_on_roots(const DiagramAutomorphism& a) {
  const RootSystem& rs = a.base;
  std::vector<bool> done(rs.roots.size(), false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit;
    std::size_t j = i;
    do {
      orbit.push_back(j);
      done[j] = true;
      j = *rs.index_of(a.matrix * rs.roots[j]);
    } while (j != i);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// Orbits consisting of positive roots (sigma preserves positivity).
inline std::vector<std::vector<std::size_t>> orbits_on_positive_roots(const DiagramAutomorphism& a) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& o : orbits_on_roots(a))
    if (o.front() < a.base.num_positive()) out.push_back(std::move(o));
  return out;
}

/// pi(x) = (1/ord) * sum_k sigma^k x.
inline RationalVector average_over_orbit(const DiagramAutomorphism& a, const RationalVector& x) {
  RationalVector sum = x, cur = x;
  for (int k = 1; k < a.order; ++k) {
    cur = a.matrix * cur;
    sum = sum + cur;
  }
  return Rational(1, a.order) * sum;
}

/// The sigma-fixed part of the root span, t^sigma.
///
/// The basis is the greedy independent subset of the averaged and
/// root-span-projected ambient unit vectors; for the type A flip this is
/// E_i = (e_i - e_{n+1-i}) / 2. Its dimension is cross-checked against an
/// elimination-based kernel of (sigma - 1) restricted to the root span.
inline SubspaceBasis fixed_subspace(const DiagramAutomorphism& a) {
  const RootSystem& rs = a.base;
  const std::size_t n = rs.ambient_dim;
  const auto complement = detail::root_span_complement(rs);

  // Orthogonal projector onto span(roots) w.r.t. gram: x - C (C^T G C)^{-1} C^T G x
  auto project_to_root_span = [&](const RationalVector& x) {
    if (complement.empty()) return x;
    const RationalMatrix c = RationalMatrix::from_columns(complement, n);
    const RationalMatrix ctg = c.transpose() * rs.gram;
    return x - c * (inverse(ctg * c) * (ctg * x));
  };

  std::vector<RationalVector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector v = project_to_root_span(average_over_orbit(a, detail::unit(n, i)));
    if (is_zero_vector(v)) continue;
    std::vector<RationalVector> trial = basis;
    trial.push_back(v);
    if (rank(RationalMatrix::from_rows(trial, n)) == trial.size()) basis = std::move(trial);
  }

  RationalMatrix stacked(n + complement.size(), n);
  const RationalMatrix m = a.matrix - RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = m(i, j);
  for (std::size_t k = 0; k < complement.size(); ++k) {
    const RationalVector g = rs.gram * complement[k];
    for (std::size_t j = 0; j < n; ++j) stacked(n + k, j) = g[j];
  }
  if (kernel(stacked).size() != basis.size()) throw std::logic_error("fixed subspace dimension mismatch");
  return SubspaceBasis(n, std::move(basis));
}

/// A vector with its multiplicity in a multiset.
struct WeightedVector {
  RationalVector vector;
  std::size_t multiplicity = 0;
};

/// pi(Phi) in fixed-subspace coordinates, as a multiset in order of first
/// appearance over the root list.
inline std::vector<WeightedVector> project_roots(const DiagramAutomorphism& a, const SubspaceBasis& fixed) {
  std::vector<WeightedVector> out;
  std::unordered_map<std::string, std::size_t> where;
  for (const auto& root : a.base.roots) {
    RationalVector c = fixed.coordinates(average_over_orbit(a, root));
    const std::string key = RationalMatrix(1, c.size(), c).encoding();
    auto [it, inserted] = where.try_emplace(key, out.size());
    if (inserted)
      out.push_back({std::move(c), 1});
    else
      ++out[it->second].multiplicity;
  }
  return out;
}

inline std::vector<WeightedVector> project_roots(const DiagramAutomorphism& a) {
  return project_roots(a, fixed_subspace(a));
}

}  // namespace twistcoh
