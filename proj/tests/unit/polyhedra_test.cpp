#include "mfields/error.hpp"
#include "mfields/polyhedra.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace mfields;
using namespace mfields::polyhedra;

namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<RatVector> hypersimplex(int k, int n) {
  std::vector<RatVector> pts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    RatVector v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) v[static_cast<std::size_t>(i)] = 1;
    pts.push_back(v);
  }
  return pts;
}

std::vector<RatVector> cube(int d) {
  std::vector<RatVector> pts;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    RatVector v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) v[static_cast<std::size_t>(i)] = 1;
    pts.push_back(v);
  }
  return pts;
}

}  // namespace

TEST(Polyhedra, SquareWithInteriorPoint) {
  const PolytopeV p({rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({2, 2}), rv({1, 1}), rv({1, 0})});
  EXPECT_EQ(p.affineDim(), 2u);
  EXPECT_EQ(p.vertices(), (std::vector<RatVector>{rv({0, 0}), rv({0, 2}), rv({2, 0}), rv({2, 2})}));
  EXPECT_EQ(p.facets().size(), 4u);
  EXPECT_EQ(latticeNormalizedVolume(p), 8);
  EXPECT_TRUE(p.contains(rv({1, 2})));
  EXPECT_FALSE(p.contains(rv({3, 1})));
}

TEST(Polyhedra, CubeFacetsAndVolume) {
  const PolytopeV p(cube(3));
  EXPECT_EQ(p.vertices().size(), 8u);
  EXPECT_EQ(p.facets().size(), 6u);
  EXPECT_EQ(latticeNormalizedVolume(p), 6);
  EXPECT_EQ(latticePointCount(p, 2), 27);
}

TEST(Polyhedra, HypersimplexLowDimensional) {
  const PolytopeV p(hypersimplex(2, 4));
  EXPECT_EQ(p.ambientDim(), 4u);
  EXPECT_EQ(p.affineDim(), 3u);
  EXPECT_EQ(p.affineHull().size(), 1u);
  EXPECT_EQ(p.vertices().size(), 6u);
  EXPECT_EQ(p.facets().size(), 8u);
  EXPECT_EQ(latticeNormalizedVolume(p), 4);
  EXPECT_EQ(latticeNormalizedVolume(p, {5, 4, 3, 2, 1, 0}), 4);
}

TEST(Polyhedra, HypersimplexEhrhart) {
  const PolytopeV p(hypersimplex(2, 4));
  EXPECT_EQ(latticePointCount(p, 1), 6);
  EXPECT_EQ(latticePointCount(p, 2), 19);
  EXPECT_EQ(latticePointCount(p, 3), 44);
  const auto e = ehrhartPolynomial(p);
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0], 1);
  EXPECT_EQ(e[1], Rational(7, 3));
  EXPECT_EQ(e[2], 2);
  EXPECT_EQ(e[3], Rational(2, 3));
  EXPECT_EQ(evaluatePolynomial(e, 5), latticePointCount(p, 5));
}

TEST(Polyhedra, SublatticeNormalization) {
  // Segment from (0,0) to (2,2): lattice length 2.
  const PolytopeV seg({rv({0, 0}), rv({2, 2})});
  EXPECT_EQ(seg.affineDim(), 1u);
  EXPECT_EQ(latticeNormalizedVolume(seg), 2);
  EXPECT_EQ(latticePointCount(seg, 1), 3);
}

TEST(Polyhedra, PointAndNonIntegral) {
  const PolytopeV pt({rv({3, 1})});
  EXPECT_EQ(pt.affineDim(), 0u);
  EXPECT_EQ(latticeNormalizedVolume(pt), 1);
  const PolytopeV half({RatVector{0}, RatVector{Rational(1, 2)}});
  EXPECT_EQ(latticeNormalizedVolume(half), Rational(1, 2));
  EXPECT_THROW(latticePointCount(half, 1), DomainError);
}

TEST(Polyhedra, EnumerationBudget) {
  const PolytopeV p(cube(3));
  EXPECT_THROW(latticePointCount(p, 10, 100), ResourceError);
}

TEST(Polyhedra, MinkowskiSum) {
  const PolytopeV a({rv({0, 0}), rv({1, 0})});
  const PolytopeV b({rv({0, 0}), rv({0, 1})});
  const PolytopeV s = minkowskiSum(a, b);
  EXPECT_EQ(s.vertices().size(), 4u);
  EXPECT_EQ(latticeNormalizedVolume(s), 2);
}

TEST(Polyhedra, ConeDimensionAndImplicitEqualities) {
  ConeH quadrant{2, {rv({-1, 0}), rv({0, -1})}, {}};
  EXPECT_EQ(coneDim(quadrant), 2u);
  EXPECT_TRUE(implicitEqualities(quadrant).empty());
  const auto x = interiorPoint(quadrant);
  ASSERT_TRUE(x);
  EXPECT_GT((*x)[0], 0);
  EXPECT_GT((*x)[1], 0);

  ConeH ray{2, {rv({1, -1}), rv({-1, 1}), rv({-1, 0})}, {}};
  EXPECT_EQ(coneDim(ray), 1u);
  EXPECT_EQ(implicitEqualities(ray), (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(interiorPoint(ray));

  ConeH withEquation{3, {rv({0, 0, -1})}, {rv({1, 1, 0})}};
  EXPECT_EQ(coneDim(withEquation), 2u);
  const auto y = interiorPoint(withEquation);
  ASSERT_TRUE(y);
  EXPECT_EQ((*y)[0] + (*y)[1], 0);
  EXPECT_GT((*y)[2], 0);
}

TEST(Polyhedra, LowerHullOfSquare) {
  const std::vector<RatVector> pts = {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
  const Subdivision flat = lowerHullCells(pts, rv({0, 0, 0, 0}));
  EXPECT_EQ(flat.cells, (std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}}));
  const Subdivision split = lowerHullCells(pts, rv({0, 0, 0, 1}));
  EXPECT_EQ(split.cells, (std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 3}}));
  const Subdivision other = lowerHullCells(pts, rv({1, 0, 0, 0}));
  EXPECT_EQ(other.cells, (std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 3}}));
  const Subdivision diag = lowerHullCells(pts, rv({0, 1, 1, 0}));
  EXPECT_EQ(diag.cells, (std::vector<std::vector<std::size_t>>{{0, 1, 3}, {0, 2, 3}}));
}

TEST(Polyhedra, LowerHullOfOctahedron) {
  // Heights 1 on one pair of opposite vertices of Delta(2,4) cut it in two.
  const auto pts = hypersimplex(2, 4);
  RatVector h(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == rv({1, 1, 0, 0}) || pts[i] == rv({0, 0, 1, 1})) h[i] = 1;
  const Subdivision s = lowerHullCells(pts, h);
  EXPECT_EQ(s.cells.size(), 2u);
  for (const auto& c : s.cells) EXPECT_EQ(c.size(), 5u);
}
