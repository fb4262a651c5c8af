#include "hull_internal.hpp"

#include "mfields/error.hpp"

#include <algorithm>
#include <bit>

namespace mfields::polyhedra {

using exactlin::RatMatrix;

namespace detail {

std::size_t IndexSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  IndexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

bool IndexSet::isSubsetOf(const IndexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<std::size_t> greedyAffineBasis(const std::vector<RatVector>& points) {
  std::vector<std::size_t> chosen;
  if (points.empty()) return chosen;
  chosen.push_back(0);
  const std::size_t dim = points.front().size();
  std::vector<RatVector> edges;
  for (std::size_t i = 1; i < points.size() && edges.size() < dim; ++i) {
    RatVector e(dim);
    for (std::size_t c = 0; c < dim; ++c) e[c] = points[i][c] - points[0][c];
    edges.push_back(e);
    if (exactlin::rank(edges, dim) == edges.size()) {
      chosen.push_back(i);
    } else {
      edges.pop_back();
    }
  }
  return chosen;
}

RatVector hyperplaneNormal(const std::vector<RatVector>& pts) {
  const std::size_t dim = pts.front().size();
  RatMatrix edges(pts.size() - 1, dim);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t c = 0; c < dim; ++c) edges(i - 1, c) = pts[i][c] - pts[0][c];
  const std::vector<RatVector> kernel = exactlin::rationalKernel(edges);
  if (kernel.size() != 1) throw Error("hyperplaneNormal: points are not affinely independent");
  return exactlin::toRational(exactlin::primitiveIntegerMultiple(kernel.front()));
}

namespace {

Halfspace normalized(RatVector normal, Rational offset) {
  normal.push_back(offset);
  const IntVector prim = exactlin::primitiveIntegerMultiple(normal);
  Halfspace h;
  h.normal.reserve(prim.size() - 1);
  for (std::size_t i = 0; i + 1 < prim.size(); ++i) h.normal.emplace_back(prim[i]);
  h.offset = prim.back();
  return h;
}

Rational slack(const Halfspace& h, const RatVector& x) { return exactlin::dot(h.normal, x) - h.offset; }

}  // namespace

std::vector<HullFacet> fullDimensionalHull(const std::vector<RatVector>& points, std::size_t dim) {
  std::vector<HullFacet> facets;
  if (dim == 0) return facets;
  const std::size_t n = points.size();
  const std::vector<std::size_t> simplex = greedyAffineBasis(points);
  if (simplex.size() != dim + 1) throw Error("fullDimensionalHull: points do not span the space");

  std::vector<bool> processed(n, false);
  for (std::size_t omit = 0; omit <= dim; ++omit) {
    std::vector<RatVector> face;
    for (std::size_t j = 0; j <= dim; ++j)
      if (j != omit) face.push_back(points[simplex[j]]);
    RatVector normal = hyperplaneNormal(face);
    Rational offset = exactlin::dot(normal, face.front());
    if (exactlin::dot(normal, points[simplex[omit]]) > offset) {
      for (Rational& q : normal) q = -q;
      offset = -offset;
    }
    HullFacet f{normalized(std::move(normal), offset), IndexSet(n)};
    for (std::size_t j = 0; j <= dim; ++j)
      if (j != omit) f.incident.set(simplex[j]);
    facets.push_back(std::move(f));
  }
  for (std::size_t i : simplex) processed[i] = true;

  for (std::size_t p = 0; p < n; ++p) {
    if (processed[p]) continue;
    processed[p] = true;
    std::vector<Rational> slacks;
    slacks.reserve(facets.size());
    bool anyVisible = false;
    for (const HullFacet& f : facets) {
      slacks.push_back(slack(f.inequality, points[p]));
      if (sgn(slacks.back()) > 0) anyVisible = true;
    }
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (sgn(slacks[i]) == 0) facets[i].incident.set(p);
    if (!anyVisible) continue;

    std::vector<HullFacet> created;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (sgn(slacks[i]) <= 0) continue;
      for (std::size_t j = 0; j < facets.size(); ++j) {
        if (sgn(slacks[j]) >= 0) continue;
        IndexSet ridge = facets[i].incident & facets[j].incident;
        if (ridge.count() + 1 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < facets.size() && adjacent; ++k)
          if (k != i && k != j && ridge.isSubsetOf(facets[k].incident)) adjacent = false;
        if (!adjacent) continue;
        // Rotate about the ridge until the hyperplane passes through p.
        const Rational lambda = -slacks[j];
        const Rational& mu = slacks[i];
        RatVector normal(dim);
        for (std::size_t c = 0; c < dim; ++c)
          normal[c] = lambda * facets[i].inequality.normal[c] + mu * facets[j].inequality.normal[c];
        Rational offset = lambda * facets[i].inequality.offset + mu * facets[j].inequality.offset;
        ridge.set(p);
        created.push_back({normalized(std::move(normal), offset), std::move(ridge)});
      }
    }
    std::vector<HullFacet> kept;
    kept.reserve(facets.size() + created.size());
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (sgn(slacks[i]) <= 0) kept.push_back(std::move(facets[i]));
    for (HullFacet& f : created) kept.push_back(std::move(f));
    facets = std::move(kept);
  }
  return facets;
}

}  // namespace detail

namespace {

std::vector<RatVector> sortedUnique(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

PolytopeV::PolytopeV(std::vector<RatVector> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("convexHull: empty point list");
  ambientDim_ = points_.front().size();
  for (const RatVector& p : points_)
    if (p.size() != ambientDim_) throw InputError("convexHull: points have different lengths");

  const std::vector<RatVector> unique = sortedUnique(points_);
  origin_ = unique.front();

  RatMatrix edges(unique.size() - 1, ambientDim_);
  for (std::size_t i = 1; i < unique.size(); ++i)
    for (std::size_t c = 0; c < ambientDim_; ++c) edges(i - 1, c) = unique[i][c] - origin_[c];
  const exactlin::RowEchelon echelon = exactlin::rref(edges);
  pivots_ = echelon.pivots;
  affineDim_ = echelon.rank;
  for (const RatVector& k : exactlin::rationalKernel(edges)) {
    RatVector normal = exactlin::toRational(exactlin::primitiveIntegerMultiple(k));
    Rational offset = exactlin::dot(normal, origin_);
    affineHull_.push_back({std::move(normal), std::move(offset)});
  }

  std::vector<RatVector> charted;
  charted.reserve(unique.size());
  for (const RatVector& p : unique) charted.push_back(chart(p));
  const std::vector<detail::HullFacet> hull = detail::fullDimensionalHull(charted, affineDim_);

  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<RatVector> normals;
    for (const detail::HullFacet& f : hull)
      if (f.incident.test(i)) normals.push_back(f.inequality.normal);
    if (exactlin::rank(normals, affineDim_) == affineDim_) vertices_.push_back(unique[i]);
  }

  for (const detail::HullFacet& f : hull) {
    chartFacets_.push_back(f.inequality);
    Halfspace ambient{RatVector(ambientDim_), f.inequality.offset};
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      ambient.normal[pivots_[i]] = f.inequality.normal[i];
      ambient.offset += f.inequality.normal[i] * origin_[pivots_[i]];
    }
    facets_.push_back(std::move(ambient));
  }
}

RatVector PolytopeV::chart(const RatVector& x) const {
  RatVector y(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) y[i] = x[pivots_[i]] - origin_[pivots_[i]];
  return y;
}

bool PolytopeV::contains(const RatVector& x) const {
  if (x.size() != ambientDim_) return false;
  for (const Hyperplane& h : affineHull_)
    if (exactlin::dot(h.normal, x) != h.offset) return false;
  for (const Halfspace& h : facets_)
    if (exactlin::dot(h.normal, x) > h.offset) return false;
  return true;
}

bool PolytopeV::isIntegral() const {
  for (const RatVector& v : vertices_)
    for (const Rational& q : v)
      if (q.get_den() != 1) return false;
  return true;
}

PolytopeV convexHull(std::vector<RatVector> points) { return PolytopeV(std::move(points)); }

PolytopeV minkowskiSum(const PolytopeV& a, const PolytopeV& b) {
  if (a.ambientDim() != b.ambientDim()) throw InputError("minkowskiSum: ambient dimensions differ");
  std::vector<RatVector> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const RatVector& u : a.vertices())
    for (const RatVector& v : b.vertices()) {
      RatVector s(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) s[i] = u[i] + v[i];
      sums.push_back(std::move(s));
    }
  return PolytopeV(std::move(sums));
}

}  // namespace mfields::polyhedra
