#include "hull_internal.hpp"

#include "mfields/error.hpp"

#include <algorithm>

namespace mfields::polyhedra {

using exactlin::LinearConstraint;
using exactlin::LpStatus;
using exactlin::Relation;

namespace {

void validate(const ConeH& cone) {
  for (const RatVector& a : cone.inequalities)
    if (a.size() != cone.ambientDim) throw InputError("ConeH: inequality has wrong length");
  for (const RatVector& b : cone.equations)
    if (b.size() != cone.ambientDim) throw InputError("ConeH: equation has wrong length");
}

}  // namespace

std::vector<std::size_t> implicitEqualities(const ConeH& cone) {
  validate(cone);
  const std::size_t d = cone.ambientDim;
  const std::size_t m = cone.inequalities.size();
  if (m == 0) return {};
  // Variables (x, s): maximize sum s subject to a_i.x + s_i <= 0 and s_i <= 1.
  // At an optimum s_i = 1 exactly for the inequalities that can be strict.
  const std::size_t width = d + m;
  std::vector<LinearConstraint> constraints;
  constraints.reserve(2 * m + cone.equations.size());
  for (std::size_t i = 0; i < m; ++i) {
    LinearConstraint c{RatVector(width), Relation::LessEqual, 0};
    std::copy(cone.inequalities[i].begin(), cone.inequalities[i].end(), c.coefficients.begin());
    c.coefficients[d + i] = 1;
    constraints.push_back(std::move(c));
    LinearConstraint bound{RatVector(width), Relation::LessEqual, 1};
    bound.coefficients[d + i] = 1;
    constraints.push_back(std::move(bound));
  }
  for (const RatVector& b : cone.equations) {
    LinearConstraint c{RatVector(width), Relation::Equal, 0};
    std::copy(b.begin(), b.end(), c.coefficients.begin());
    constraints.push_back(std::move(c));
  }
  RatVector objective(width);
  for (std::size_t i = 0; i < m; ++i) objective[d + i] = 1;
  const exactlin::LpResult lp = exactlin::solveExactLP(objective, constraints);
  if (lp.status != LpStatus::Optimal) throw Error("implicitEqualities: auxiliary LP is not optimal");
  std::vector<std::size_t> implicit;
  for (std::size_t i = 0; i < m; ++i)
    if (lp.point[d + i] < 1) implicit.push_back(i);
  return implicit;
}

std::size_t coneDim(const ConeH& cone) {
  std::vector<RatVector> rows = cone.equations;
  for (std::size_t i : implicitEqualities(cone)) rows.push_back(cone.inequalities[i]);
  return cone.ambientDim - exactlin::rank(rows, cone.ambientDim);
}

std::optional<IntVector> interiorPoint(const ConeH& cone) {
  validate(cone);
  const std::size_t d = cone.ambientDim;
  if (cone.inequalities.empty()) return IntVector(d);
  // Maximize a uniform slack t with a_i.x + t <= 0 and t <= 1.
  std::vector<LinearConstraint> constraints;
  constraints.reserve(cone.inequalities.size() + cone.equations.size() + 1);
  for (const RatVector& a : cone.inequalities) {
    LinearConstraint c{a, Relation::LessEqual, 0};
    c.coefficients.emplace_back(1);
    constraints.push_back(std::move(c));
  }
  for (const RatVector& b : cone.equations) {
    LinearConstraint c{b, Relation::Equal, 0};
    c.coefficients.emplace_back(0);
    constraints.push_back(std::move(c));
  }
  LinearConstraint cap{RatVector(d + 1), Relation::LessEqual, 1};
  cap.coefficients[d] = 1;
  constraints.push_back(std::move(cap));
  RatVector objective(d + 1);
  objective[d] = 1;
  const exactlin::LpResult lp = exactlin::solveExactLP(objective, constraints);
  if (lp.status != LpStatus::Optimal) throw Error("interiorPoint: auxiliary LP is not optimal");
  if (sgn(lp.point[d]) <= 0) return std::nullopt;
  RatVector x(lp.point.begin(), lp.point.begin() + static_cast<std::ptrdiff_t>(d));
  return exactlin::primitiveIntegerMultiple(x);
}

Subdivision lowerHullCells(const std::vector<RatVector>& points, const RatVector& heights) {
  if (points.size() != heights.size()) throw InputError("lowerHullCells: one height per point is required");
  if (points.empty()) throw InputError("lowerHullCells: no points");
  Subdivision out{points, heights, {}};
  const PolytopeV base(points);
  const std::size_t d = base.affineDim();

  std::vector<RatVector> lifted;
  lifted.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatVector z = base.chart(points[i]);
    z.push_back(heights[i]);
    lifted.push_back(std::move(z));
  }

  // Insert in lexicographic order of the lifted coordinates.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lifted[a] < lifted[b]; });
  std::vector<RatVector> sorted;
  for (std::size_t i : order) sorted.push_back(lifted[i]);

  if (detail::greedyAffineBasis(sorted).size() != d + 2) {
    // Heights are affine on the configuration: a single cell.
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    out.cells.push_back(std::move(all));
    return out;
  }

  for (const detail::HullFacet& f : detail::fullDimensionalHull(sorted, d + 1)) {
    if (sgn(f.inequality.normal.back()) >= 0) continue;
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (exactlin::dot(f.inequality.normal, lifted[i]) == f.inequality.offset) cell.push_back(i);
    out.cells.push_back(std::move(cell));
  }
  std::sort(out.cells.begin(), out.cells.end());
  out.cells.erase(std::unique(out.cells.begin(), out.cells.end()), out.cells.end());
  return out;
}

}  // namespace mfields::polyhedra
