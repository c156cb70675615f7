#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "twistcoh/errors.hpp"
#include "twistcoh/twist/automorphism.hpp"
#include "twistcoh/twist/folding.hpp"
#include "twistcoh/weyl/group.hpp"

using namespace twistcoh;

namespace {

DiagramAutomorphism make(char family, int rank, AutoKind kind, std::vector<int> perm = {}) {
  return make_automorphism(build_root_system({family, rank}), AutomorphismSpec{kind, std::move(perm)});
}

struct Case {
  char family;
  int rank;
  AutoKind kind;
};

std::vector<Case> twisted_cases() {
  std::vector<Case> out;
  for (int n = 2; n <= 8; ++n) out.push_back({'A', n, AutoKind::flip});
  for (int n = 2; n <= 6; ++n) out.push_back({'D', n, AutoKind::flip});
  out.push_back({'D', 4, AutoKind::triality});
  out.push_back({'D', 4, AutoKind::triality2});
  out.push_back({'E', 6, AutoKind::flip});
  return out;
}

FiniteMatrixGroup restricted_wsigma(const DiagramAutomorphism& a, const SubspaceBasis& v) {
  std::vector<RationalMatrix> gens;
  for (const auto& r : a.base.simple_roots) gens.push_back(reflection_matrix(r, a.base.gram));
  return restrict_to_subspace(stabilizer_of_generated(gens, v), v);
}

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

std::multiset<std::size_t> sizes(const std::vector<std::vector<std::size_t>>& orbits) {
  std::multiset<std::size_t> s;
  for (const auto& o : orbits) s.insert(o.size());
  return s;
}

}  // namespace

TEST(AutomorphismSpec, Parsing) {
  EXPECT_EQ(parse_automorphism_spec("identity").kind, AutoKind::identity);
  EXPECT_EQ(parse_automorphism_spec("flip").kind, AutoKind::flip);
  EXPECT_EQ(parse_automorphism_spec("triality2").kind, AutoKind::triality2);
  const auto p = parse_automorphism_spec("perm=1,2,4,3");
  EXPECT_EQ(p.kind, AutoKind::permutation);
  EXPECT_EQ(p.perm, (std::vector<int>{1, 2, 4, 3}));
  EXPECT_EQ(p.to_string(), "perm=1,2,4,3");
  EXPECT_THROW(parse_automorphism_spec("rotate"), InputError);
  EXPECT_THROW(parse_automorphism_spec("perm="), InputError);
  EXPECT_THROW(parse_automorphism_spec("perm=1,x"), InputError);
}

TEST(Automorphism, Orders) {
  EXPECT_EQ(make('E', 7, AutoKind::identity).order, 1);
  EXPECT_TRUE(make('G', 2, AutoKind::identity).is_identity());
  EXPECT_EQ(make('A', 3, AutoKind::flip).order, 2);
  EXPECT_EQ(make('D', 5, AutoKind::flip).order, 2);
  EXPECT_EQ(make('E', 6, AutoKind::flip).order, 2);
  EXPECT_EQ(make('D', 4, AutoKind::triality).order, 3);
  EXPECT_EQ(make('D', 4, AutoKind::triality2).order, 3);
}

TEST(Automorphism, TrialitySquared) {
  const auto t = make('D', 4, AutoKind::triality);
  const auto t2 = make('D', 4, AutoKind::triality2);
  EXPECT_EQ(t.matrix * t.matrix, t2.matrix);
}

TEST(Automorphism, TypeAFlipFormula) {
  for (int n = 3; n <= 7; ++n) {
    const auto a = make('A', n - 1, AutoKind::flip);
    const auto& rs = a.base;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        RationalVector x(n), y(n);
        x[i - 1] = 1;
        x[j - 1] = -1;
        y[n - j] = 1;
        y[n - i] = -1;
        EXPECT_EQ(a.matrix * x, y);
        EXPECT_TRUE(rs.contains(x));
      }
  }
}

TEST(Automorphism, ExplicitPermutation) {
  const auto p = make('D', 4, AutoKind::permutation, {1, 2, 4, 3});
  EXPECT_EQ(p.matrix, make('D', 4, AutoKind::flip).matrix);
  EXPECT_EQ(make('A', 3, AutoKind::permutation, {1, 2, 3}).order, 1);
}

TEST(Automorphism, Errors) {
  EXPECT_THROW(make('A', 1, AutoKind::flip), InputError);
  EXPECT_THROW(make('B', 3, AutoKind::flip), InputError);
  EXPECT_THROW(make('C', 3, AutoKind::flip), InputError);
  EXPECT_THROW(make('G', 2, AutoKind::flip), InputError);
  EXPECT_THROW(make('F', 4, AutoKind::flip), InputError);
  EXPECT_THROW(make('E', 7, AutoKind::flip), InputError);
  EXPECT_THROW(make('E', 8, AutoKind::flip), InputError);
  EXPECT_THROW(make('D', 5, AutoKind::triality), InputError);
  EXPECT_THROW(make('A', 3, AutoKind::triality2), InputError);
  EXPECT_THROW(make('B', 3, AutoKind::permutation, {3, 2, 1}), InputError);
  EXPECT_THROW(make('A', 3, AutoKind::permutation, {2, 1, 3}), InputError);
  EXPECT_THROW(make('A', 3, AutoKind::permutation, {1, 2}), InputError);
  EXPECT_THROW(make('A', 3, AutoKind::permutation, {1, 1, 3}), InputError);
  EXPECT_THROW(make('A', 3, AutoKind::permutation, {0, 2, 3}), InputError);
}

TEST(Automorphism, PermutesRootsAndPositiveSystem) {
  for (const auto& c : twisted_cases()) {
    const auto a = make(c.family, c.rank, c.kind);
    const auto& rs = a.base;
    std::set<std::size_t> hit;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      const auto j = rs.index_of(a.matrix * rs.roots[i]);
      ASSERT_TRUE(j.has_value());
      EXPECT_EQ(i < rs.num_positive(), *j < rs.num_positive());
      hit.insert(*j);
    }
    EXPECT_EQ(hit.size(), rs.roots.size());
    // Isometry of the form.
    EXPECT_EQ(a.matrix.transpose() * rs.gram * a.matrix, rs.gram);
  }
}

TEST(Orbits, Examples) {
  const auto id = make('A', 2, AutoKind::identity);
  EXPECT_EQ(orbits_on_roots(id).size(), 6u);
  EXPECT_EQ(sizes(orbits_on_roots(id)), (std::multiset<std::size_t>{1, 1, 1, 1, 1, 1}));
  const auto tri = make('D', 4, AutoKind::triality);
  EXPECT_EQ(sizes(orbits_on_positive_roots(tri)), (std::multiset<std::size_t>{1, 1, 1, 3, 3, 3}));
  EXPECT_EQ(orbits_on_positive_roots(make('E', 6, AutoKind::flip)).size(), 24u);
}

TEST(Orbits, SizesDivideOrderAndPartitionRoots) {
  for (const auto& c : twisted_cases()) {
    const auto a = make(c.family, c.rank, c.kind);
    std::size_t total = 0;
    std::set<std::size_t> seen;
    for (const auto& o : orbits_on_roots(a)) {
      EXPECT_EQ(a.order % static_cast<int>(o.size()), 0);
      total += o.size();
      seen.insert(o.begin(), o.end());
    }
    EXPECT_EQ(total, a.base.roots.size());
    EXPECT_EQ(seen.size(), a.base.roots.size());
  }
}

TEST(FixedSubspace, Dimensions) {
  EXPECT_EQ(fixed_subspace(make('A', 3, AutoKind::identity)).dim(), 3u);
  EXPECT_EQ(fixed_subspace(make('E', 6, AutoKind::identity)).dim(), 6u);
  EXPECT_EQ(fixed_subspace(make('A', 3, AutoKind::flip)).dim(), 2u);
  EXPECT_EQ(fixed_subspace(make('D', 4, AutoKind::triality)).dim(), 2u);
  EXPECT_EQ(fixed_subspace(make('E', 6, AutoKind::flip)).dim(), 4u);
}

TEST(FixedSubspace, TypeAFlipSpannedByAntisymmetricVectors) {
  const auto v = fixed_subspace(make('A', 3, AutoKind::flip));
  EXPECT_TRUE(v.contains(vec({1, 0, 0, -1})));
  EXPECT_TRUE(v.contains(vec({0, 1, -1, 0})));
  EXPECT_FALSE(v.contains(vec({1, -1, 0, 0})));
}

TEST(FixedSubspace, VectorsAreFixedAndInRootSpan) {
  for (const auto& c : twisted_cases()) {
    const auto a = make(c.family, c.rank, c.kind);
    const auto v = fixed_subspace(a);
    for (const auto& b : v.vectors()) {
      EXPECT_EQ(a.matrix * b, b);
      // Lies in the span of the roots.
      RationalMatrix roots = RationalMatrix::from_rows(a.base.simple_roots, a.base.ambient_dim);
      std::vector<RationalVector> with = a.base.simple_roots;
      with.push_back(b);
      EXPECT_EQ(rank(RationalMatrix::from_rows(with, a.base.ambient_dim)), rank(roots));
    }
  }
}

TEST(Projection, TypeAFlipEvenGivesC2Pattern) {
  const auto a = make('A', 3, AutoKind::flip);
  std::set<RationalVector> got;
  for (const auto& w : project_roots(a)) got.insert(w.vector);
  std::set<RationalVector> expect;
  for (int s : {1, -1})
    for (int t : {1, -1}) expect.insert(vec({s, t}));
  for (int s : {2, -2}) {
    expect.insert(vec({s, 0}));
    expect.insert(vec({0, s}));
  }
  EXPECT_EQ(got, expect);
}

TEST(Projection, TypeAFlipOddIsNonReduced) {
  const auto a = make('A', 4, AutoKind::flip);
  std::set<RationalVector> got;
  std::size_t total = 0;
  for (const auto& w : project_roots(a)) {
    got.insert(w.vector);
    total += w.multiplicity;
  }
  EXPECT_EQ(total, a.base.roots.size());
  for (int s : {1, 2, -1, -2}) {
    EXPECT_TRUE(got.count(vec({s, 0})));
    EXPECT_TRUE(got.count(vec({0, s})));
  }
}

TEST(Projection, IsEquivariantUnderTheStabilizer) {
  for (const Case c : {Case{'A', 3, AutoKind::flip}, Case{'A', 4, AutoKind::flip}, Case{'D', 4, AutoKind::triality},
                       Case{'D', 5, AutoKind::flip}}) {
    const auto a = make(c.family, c.rank, c.kind);
    const auto v = fixed_subspace(a);
    std::vector<RationalMatrix> gens;
    for (const auto& r : a.base.simple_roots) gens.push_back(reflection_matrix(r, a.base.gram));
    const auto stab = stabilizer_of_generated(gens, v);
    for (const auto& w : stab.elements()) {
      const auto rw = restrict_matrix(w, v);
      for (const auto& x : a.base.roots)
        ASSERT_EQ(v.coordinates(average_over_orbit(a, w * x)), rw * v.coordinates(average_over_orbit(a, x)));
    }
  }
}

TEST(Folding, CatalogTypes) {
  for (int n = 2; n <= 6; ++n) {
    const auto f = folded_root_system(make('D', n, AutoKind::flip));
    EXPECT_EQ(f.folded_type.to_string(), "B" + std::to_string(n - 1));
    EXPECT_EQ(f.folded.roots.size(), static_cast<std::size_t>(2 * (n - 1) * (n - 1)));
  }
  EXPECT_EQ(folded_root_system(make('D', 4, AutoKind::triality)).folded_type.to_string(), "G2");
  EXPECT_EQ(folded_root_system(make('E', 6, AutoKind::flip)).folded_type.to_string(), "F4");
  EXPECT_EQ(folded_root_system(make('A', 5, AutoKind::flip)).folded_type.to_string(), "C3");
  EXPECT_EQ(folded_root_system(make('A', 6, AutoKind::flip)).folded_type.to_string(), "B3");
  const auto id = folded_root_system(make('F', 4, AutoKind::identity));
  EXPECT_EQ(id.folded_type.to_string(), "F4");
  EXPECT_EQ(id.folded.roots.size(), 48u);
}

TEST(Folding, FoldedRootsLieInProjectionWithScaleOne) {
  for (const auto& c : twisted_cases()) {
    const auto f = folded_root_system(make(c.family, c.rank, c.kind));
    for (int s : containment_scales(f)) EXPECT_EQ(s, 1);
    EXPECT_EQ(static_cast<std::size_t>(f.folded_type.rank), f.fixed_basis.dim());
    EXPECT_EQ(f.folded.weyl_order, weyl_order(f.folded_type));
  }
}

TEST(Folding, OtherInvolutionOfD4) {
  const auto a = make('D', 4, AutoKind::permutation, {3, 2, 1, 4});
  EXPECT_EQ(a.order, 2);
  EXPECT_EQ(folded_root_system(a).folded_type.to_string(), "B3");
}

TEST(Criterion, OrbitCounts) {
  const auto tri = orbit_count_criterion(make('D', 4, AutoKind::triality));
  EXPECT_EQ(tri.orbit_count, 12u);
  EXPECT_EQ(tri.folded_root_count, 12u);
  EXPECT_TRUE(tri.holds);
  const auto e6 = orbit_count_criterion(make('E', 6, AutoKind::flip));
  EXPECT_EQ(e6.orbit_count, 48u);
  EXPECT_TRUE(e6.holds);
  const auto a4 = orbit_count_criterion(make('A', 4, AutoKind::flip));
  EXPECT_EQ(a4.orbit_count, 12u);
  EXPECT_EQ(a4.folded_root_count, 8u);
  EXPECT_FALSE(a4.holds);
  for (int n = 2; n <= 6; ++n) {
    const auto d = orbit_count_criterion(make('D', n, AutoKind::flip));
    EXPECT_EQ(d.orbit_count, static_cast<std::size_t>(2 * (n - 1) * (n - 1)));
    EXPECT_TRUE(d.holds);
  }
}

TEST(Criterion, WsigmaPreservesFoldedRoots) {
  for (const Case c : {Case{'A', 2, AutoKind::identity}, Case{'A', 3, AutoKind::flip}, Case{'A', 4, AutoKind::flip},
                       Case{'D', 4, AutoKind::triality}, Case{'D', 5, AutoKind::flip}, Case{'E', 6, AutoKind::flip}}) {
    const auto a = make(c.family, c.rank, c.kind);
    const auto f = folded_root_system(a);
    const auto image = restricted_wsigma(a, f.fixed_basis);
    EXPECT_TRUE(wsigma_preserves_folded(a, image, f));
    EXPECT_EQ(BigInt(static_cast<unsigned long>(image.order())), weyl_order(f.folded_type))
        << c.family << c.rank;
  }
}

TEST(Criterion, WsigmaCheckDetectsForeignElements) {
  const auto a = make('A', 3, AutoKind::flip);
  const auto f = folded_root_system(a);
  const FiniteMatrixGroup bogus(2, {RationalMatrix::identity(2), RationalMatrix{{2, 0}, {0, 1}}});
  EXPECT_FALSE(wsigma_preserves_folded(bogus, f));
  EXPECT_THROW(wsigma_preserves_folded(FiniteMatrixGroup(3, {RationalMatrix::identity(3)}), f), InputError);
}
