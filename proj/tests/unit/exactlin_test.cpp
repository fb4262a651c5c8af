#include "mfields/error.hpp"
#include "mfields/exactlin.hpp"

#include <gtest/gtest.h>

using namespace mfields;
using namespace mfields::exactlin;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Exactlin, RrefAndRank) {
  const RatMatrix m = RatMatrix::fromIntRows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const RowEchelon e = rref(m);
  EXPECT_EQ(e.rank, 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.reduced, RatMatrix::fromIntRows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  EXPECT_EQ(rank(RatMatrix::identity(4)), 4u);
}

TEST(Exactlin, Determinant) {
  EXPECT_EQ(determinant(RatMatrix::fromIntRows({{2, 1}, {1, 3}})), 5);
  EXPECT_EQ(determinant(RatMatrix::fromIntRows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(RatMatrix::fromIntRows({{1, 2}, {2, 4}})), 0);
}

TEST(Exactlin, SolveSquare) {
  const auto x = solveSquare(RatMatrix::fromIntRows({{2, 0}, {0, 4}}), rv({1, 1}));
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(1, 2));
  EXPECT_EQ((*x)[1], Rational(1, 4));
  EXPECT_FALSE(solveSquare(RatMatrix::fromIntRows({{1, 1}, {1, 1}}), rv({1, 2})));
}

TEST(Exactlin, RationalKernel) {
  const RatMatrix m = RatMatrix::fromIntRows({{1, 1, 0}, {0, 1, 1}});
  const auto k = rationalKernel(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(m * k[0], rv({0, 0}));
}

TEST(Exactlin, HermiteNormalFormIsCanonical) {
  const auto a = hermiteNormalForm({iv({2, 4}), iv({1, 3})});
  const auto b = hermiteNormalForm({iv({1, 3}), iv({3, 7})});
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0][0], 1);
  EXPECT_EQ(a[1], iv({0, 2}));
}

TEST(Exactlin, KernelLatticeIsSaturated) {
  const IntLattice l = kernelLatticeBasis(RatMatrix::fromIntRows({{2, 4, 6}}));
  EXPECT_EQ(l.rank(), 2u);
  EXPECT_TRUE(l.contains(iv({1, 1, -1})));
  EXPECT_TRUE(l.contains(iv({-2, 1, 0})));
  EXPECT_FALSE(l.contains(iv({1, 0, 0})));
  const auto c = l.coordinates(iv({1, 1, -1}));
  ASSERT_TRUE(c);
  IntVector back(3);
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < 3; ++j) back[j] += (*c)[i] * l.basis()[i][j];
  EXPECT_EQ(back, iv({1, 1, -1}));
  EXPECT_THROW(kernelLatticeBasis(RatMatrix::fromRows({{Rational(1, 2), 1}})), InputError);
}

TEST(Exactlin, LatticeEqualityIgnoresGenerators) {
  EXPECT_EQ(IntLattice(2, {iv({1, 1}), iv({0, 2})}), IntLattice(2, {iv({1, -1}), iv({2, 0})}));
  EXPECT_FALSE(IntLattice(2, {iv({1, 0})}) == IntLattice(2, {iv({2, 0})}));
}

TEST(Exactlin, LpOptimal) {
  const std::vector<LinearConstraint> c = {
      {rv({1, 0}), Relation::LessEqual, 2},
      {rv({0, 1}), Relation::LessEqual, 3},
      {rv({1, 1}), Relation::LessEqual, 4},
  };
  const LpResult r = solveExactLP(rv({1, 1}), c);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.point[0] + r.point[1], 4);
}

TEST(Exactlin, LpFreeVariablesAndEqualities) {
  const std::vector<LinearConstraint> c = {
      {rv({1, 1}), Relation::Equal, -3},
      {rv({-1, 0}), Relation::LessEqual, 5},
  };
  const LpResult r = solveExactLP(rv({0, 1}), c);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.point, rv({-5, 2}));
}

TEST(Exactlin, LpInfeasibleAndUnbounded) {
  EXPECT_EQ(solveExactLP(rv({1}), {{rv({1}), Relation::LessEqual, -1}, {rv({-1}), Relation::LessEqual, 0}}).status,
            LpStatus::Infeasible);
  const LpResult u = solveExactLP(rv({1, 0}), {{rv({-1, 0}), Relation::LessEqual, 0}});
  ASSERT_EQ(u.status, LpStatus::Unbounded);
  EXPECT_GT(u.ray[0], 0);
}

TEST(Exactlin, PrimitiveIntegerMultiple) {
  EXPECT_EQ(primitiveIntegerMultiple({Rational(1, 2), Rational(-3, 4)}), iv({2, -3}));
  EXPECT_EQ(primitiveIntegerMultiple(rv({0, 0})), iv({0, 0}));
  EXPECT_EQ(primitiveIntegerMultiple(rv({4, 6})), iv({2, 3}));
}
