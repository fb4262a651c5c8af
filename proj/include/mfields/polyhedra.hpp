#pragma once

// Exact polyhedral geometry over Q: cones in H-representation, polytopes
// from point sets, normalized lattice volume, lattice point counting and
// regular subdivisions.

#include "mfields/exactlin.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mfields::polyhedra {

/// {x : a . x <= 0 for every inequality a, b . x = 0 for every equation b}.
struct ConeH {
  std::size_t ambientDim = 0;
  std::vector<RatVector> inequalities;
  std::vector<RatVector> equations;
};

std::size_t coneDim(const ConeH& cone);

/// Indices of the inequalities that hold with equality on the whole cone.
std::vector<std::size_t> implicitEqualities(const ConeH& cone);

/// Integral point satisfying every inequality strictly, or nullopt when some
/// inequality is an implicit equality.
std::optional<IntVector> interiorPoint(const ConeH& cone);

/// Inequality normal . x <= offset.
struct Halfspace {
  RatVector normal;
  Rational offset;
};

/// Affine equation normal . x = offset.
struct Hyperplane {
  RatVector normal;
  Rational offset;
};

class PolytopeV {
 public:
  /// Convex hull of a nonempty list of points of equal length.
  explicit PolytopeV(std::vector<RatVector> points);

  std::size_t ambientDim() const { return ambientDim_; }
  std::size_t affineDim() const { return affineDim_; }
  const std::vector<RatVector>& points() const { return points_; }
  /// Vertices in lexicographic order.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Hyperplane>& affineHull() const { return affineHull_; }
  /// Facet inequalities; together with affineHull() they cut out the polytope.
  const std::vector<Halfspace>& facets() const { return facets_; }

  bool contains(const RatVector& x) const;
  bool isIntegral() const;

  /// Coordinates of x in the polytope's own full-dimensional chart
  /// (projection onto the pivot coordinates of the affine hull, relative to
  /// the first vertex).
  RatVector chart(const RatVector& x) const;
  const std::vector<std::size_t>& chartCoordinates() const { return pivots_; }
  const RatVector& chartOrigin() const { return origin_; }
  /// Facets expressed in chart coordinates.
  const std::vector<Halfspace>& chartFacets() const { return chartFacets_; }

 private:
  std::size_t ambientDim_ = 0;
  std::size_t affineDim_ = 0;
  std::vector<RatVector> points_;
  std::vector<RatVector> vertices_;
  std::vector<Hyperplane> affineHull_;
  std::vector<Halfspace> facets_;
  RatVector origin_;
  std::vector<std::size_t> pivots_;
  std::vector<Halfspace> chartFacets_;
};

PolytopeV convexHull(std::vector<RatVector> points);

/// Normalized volume (Euclidean volume times dim!) measured in the lattice
/// (linear span of the edge directions) cap Z^d. Vertices may be rational.
Rational latticeNormalizedVolume(const PolytopeV& p);

/// Same quantity from a placing triangulation inserting vertices in the
/// given order; used to cross-check triangulation independence.
Rational latticeNormalizedVolume(const PolytopeV& p, const std::vector<std::size_t>& vertexOrder);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

/// Number of lattice points in dilate * p. Throws ResourceError when the
/// enumeration box exceeds the budget.
Integer latticePointCount(const PolytopeV& p, unsigned dilate,
                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Coefficients of the Ehrhart polynomial, constant term first.
std::vector<Rational> ehrhartPolynomial(const PolytopeV& p, std::uint64_t budget = kDefaultEnumerationBudget);
Rational evaluatePolynomial(const std::vector<Rational>& coefficients, const Rational& t);

PolytopeV minkowskiSum(const PolytopeV& a, const PolytopeV& b);

struct Subdivision {
  std::vector<RatVector> points;
  RatVector heights;
  /// Maximal cells as sorted point indices, sorted lexicographically.
  std::vector<std::vector<std::size_t>> cells;
};

/// Regular subdivision induced by lifting each point by its height and
/// projecting the lower faces of the lifted hull back down.
Subdivision lowerHullCells(const std::vector<RatVector>& points, const RatVector& heights);

}  // namespace mfields::polyhedra
