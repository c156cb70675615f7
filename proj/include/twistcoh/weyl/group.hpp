#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/matrix.hpp"

namespace twistcoh {

inline constexpr std::size_t kDefaultElementCap = 10'000'000;

/// Enumerated finite group of exact square matrices.
///
/// Elements are distinct and kept in insertion order. `charpoly_buckets`
/// maps each characteristic polynomial to the number of elements having it.
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup() = default;

  // `elements` must be pairwise distinct and closed under multiplication.
  FiniteMatrixGroup(std::size_t dim, std::vector<RationalMatrix> elements) : dim_(dim), elements_(std::move(elements)) {
    for (const auto& g : elements_) {
      if (g.rows() != dim_ || g.cols() != dim_) throw InputError("group element has the wrong dimension");
      ++buckets_[charpoly(g)];
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<RationalMatrix>& elements() const noexcept { return elements_; }
  const std::map<Polynomial, std::uint64_t>& charpoly_buckets() const noexcept { return buckets_; }

 private:
  std::size_t dim_ = 0;
  std::vector<RationalMatrix> elements_;
  std::map<Polynomial, std::uint64_t> buckets_;
};

/// Reflection x -> x - 2<x,a>/<a,a> a for the inner product x^T gram y.
inline RationalMatrix reflection_matrix(const RationalVector& root, const RationalMatrix& gram) {
  const std::size_t n = root.size();
  if (gram.rows() != n || gram.cols() != n) throw InputError("reflection_matrix: dimension mismatch");
  if (is_zero_vector(root)) throw InputError("reflection_matrix: zero root");
  const RationalVector g_root = gram * root;
  const Rational norm = dot(root, g_root);
  if (norm.sign() <= 0) throw InputError("reflection_matrix: root has non-positive norm");
  const Rational c = Rational(2) / norm;
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (root[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!g_root[j].is_zero()) m(i, j) -= c * root[i] * g_root[j];
  }
  return m;
}

inline RationalMatrix reflection_matrix(const RationalVector& root, std::size_t ambient_dim) {
  if (root.size() != ambient_dim) throw InputError("reflection_matrix: root does not live in the ambient space");
  return reflection_matrix(root, RationalMatrix::identity(ambient_dim));
}

/// Breadth-first closure of `generators` under right multiplication,
/// calling `visit` once per distinct element in a deterministic order
/// (identity first). Only the encodings of visited elements and the
/// current frontier are kept in memory.
inline void for_each_group_element(const std::vector<RationalMatrix>& generators,
                                   const std::function<void(const RationalMatrix&)>& visit,
                                   std::size_t cap = kDefaultElementCap, std::size_t dim_if_empty = 0) {
  const std::size_t n = generators.empty() ? dim_if_empty : generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw InputError("generators must be square of equal dimension");

  std::unordered_set<std::string> seen;
  std::deque<RationalMatrix> frontier;
  RationalMatrix id = RationalMatrix::identity(n);
  seen.insert(id.encoding());
  visit(id);
  frontier.push_back(std::move(id));
  std::string key;
  while (!frontier.empty()) {
    RationalMatrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : generators) {
      RationalMatrix next = cur * gen;
      key.clear();
      next.append_encoding(key);
      if (!seen.insert(key).second) continue;
      if (seen.size() > cap)
        throw ResourceCapError("group too large: more than " + std::to_string(cap) + " elements");
      visit(next);
      frontier.push_back(std::move(next));
    }
  }
}

inline FiniteMatrixGroup generate_group(const std::vector<RationalMatrix>& generators,
                                        std::size_t cap = kDefaultElementCap, std::size_t dim_if_empty = 0) {
  std::vector<RationalMatrix> elems;
  for_each_group_element(
      generators, [&](const RationalMatrix& g) { elems.push_back(g); }, cap, dim_if_empty);
  const std::size_t n = generators.empty() ? dim_if_empty : generators.front().rows();
  return FiniteMatrixGroup(n, std::move(elems));
}

/// Basis of a linear subspace of rational n-space, with a cached left
/// inverse so that coordinates of vectors in the span are a single product.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(std::size_t ambient_dim, std::vector<RationalVector> basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_)
      if (v.size() != ambient_dim_) throw InputError("subspace basis vector has wrong dimension");
    if (basis_.empty()) return;
    b_ = RationalMatrix::from_columns(basis_, ambient_dim_);
    const RationalMatrix bt = b_.transpose();
    const RationalMatrix gram = bt * b_;
    if (twistcoh::rank(gram) != basis_.size()) throw InputError("subspace basis vectors are linearly dependent");
    left_inverse_ = inverse(gram) * bt;
  }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<RationalVector>& vectors() const noexcept { return basis_; }
  // ambient_dim x dim matrix whose columns are the basis vectors.
  const RationalMatrix& matrix() const noexcept { return b_; }
  const RationalMatrix& left_inverse() const noexcept { return left_inverse_; }

  RationalVector coordinates(const RationalVector& v) const {
    if (basis_.empty()) return {};
    return left_inverse_ * v;
  }
  RationalVector from_coordinates(const RationalVector& c) const {
    if (basis_.empty()) return RationalVector(ambient_dim_);
    return b_ * c;
  }
  bool contains(const RationalVector& v) const {
    if (basis_.empty()) return is_zero_vector(v);
    return from_coordinates(coordinates(v)) == v;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RationalVector> basis_;
  RationalMatrix b_;
  RationalMatrix left_inverse_;
};

// Columns of g * B lie in span(B).
inline bool preserves_subspace(const RationalMatrix& g, const SubspaceBasis& v) {
  if (v.dim() == 0) return true;
  const RationalMatrix img = g * v.matrix();
  const RationalMatrix back = v.matrix() * (v.left_inverse() * img);
  return back == img;
}

/// {g in G : g V = V}. Elements keep their order in G.
inline FiniteMatrixGroup subspace_stabilizer(const FiniteMatrixGroup& g, const SubspaceBasis& v) {
  if (v.ambient_dim() != g.dim()) throw InputError("subspace_stabilizer: dimension mismatch");
  std::vector<RationalMatrix> keep;
  for (const auto& x : g.elements())
    if (preserves_subspace(x, v)) keep.push_back(x);
  return FiniteMatrixGroup(g.dim(), std::move(keep));
}

/// Same as subspace_stabilizer(generate_group(generators), v) without
/// materializing the full group.
inline FiniteMatrixGroup stabilizer_of_generated(const std::vector<RationalMatrix>& generators, const SubspaceBasis& v,
                                                 std::size_t cap = kDefaultElementCap) {
  std::vector<RationalMatrix> keep;
  for_each_group_element(
      generators,
      [&](const RationalMatrix& x) {
        if (preserves_subspace(x, v)) keep.push_back(x);
      },
      cap, v.ambient_dim());
  return FiniteMatrixGroup(v.ambient_dim(), std::move(keep));
}

inline RationalMatrix restrict_matrix(const RationalMatrix& g, const SubspaceBasis& v) {
  return v.left_inverse() * (g * v.matrix());
}

/// Image of G acting on span(V), in V-coordinates, deduplicated in order of
/// first appearance.
inline FiniteMatrixGroup restrict_to_subspace(const FiniteMatrixGroup& g, const SubspaceBasis& v) {
  if (v.ambient_dim() != g.dim()) throw InputError("restrict_to_subspace: dimension mismatch");
  std::unordered_set<std::string> seen;
  std::vector<RationalMatrix> image;
  for (const auto& x : g.elements()) {
    if (!preserves_subspace(x, v)) throw InputError("restrict_to_subspace: element does not preserve the subspace");
    RationalMatrix r = v.dim() == 0 ? RationalMatrix(0, 0) : restrict_matrix(x, v);
    if (seen.insert(r.encoding()).second) image.push_back(std::move(r));
  }
  return FiniteMatrixGroup(v.dim(), std::move(image));
}

}  // namespace twistcoh
