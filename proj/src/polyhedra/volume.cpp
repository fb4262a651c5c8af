#include "hull_internal.hpp"

#include "mfields/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace mfields::polyhedra {

using exactlin::RatMatrix;

namespace {

void requireIntegral(const PolytopeV& p, const char* what) {
  if (!p.isIntegral()) throw DomainError(std::string(what) + ": polytope has non-integral vertices");
}

// Basis of (span of the polytope's edge directions) cap Z^d, written in chart
// coordinates as the columns of a square matrix.
RatMatrix latticeChartBasis(const PolytopeV& p) {
  const std::size_t d = p.affineDim();
  const std::size_t ambient = p.ambientDim();
  std::vector<IntVector> basis;
  if (p.affineHull().empty()) {
    for (std::size_t i = 0; i < ambient; ++i) {
      IntVector e(ambient);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    RatMatrix normals(p.affineHull().size(), ambient);
    for (std::size_t r = 0; r < p.affineHull().size(); ++r)
      for (std::size_t c = 0; c < ambient; ++c) normals(r, c) = p.affineHull()[r].normal[c];
    basis = exactlin::kernelLatticeBasis(normals).basis();
  }
  if (basis.size() != d) throw Error("latticeChartBasis: lattice rank does not match dimension");
  RatMatrix m(d, d);
  const auto& pivots = p.chartCoordinates();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = basis[j][pivots[i]];
  return m;
}

Rational orientation(const std::vector<const RatVector*>& face, const RatVector& q) {
  const std::size_t d = q.size();
  RatMatrix m(d, d);
  for (std::size_t r = 1; r < face.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) m(r - 1, c) = (*face[r])[c] - (*face.front())[c];
  for (std::size_t c = 0; c < d; ++c) m(d - 1, c) = q[c] - (*face.front())[c];
  return exactlin::determinant(std::move(m));
}

// Sum of |det| over a placing triangulation of the points (full-dimensional
// chart coordinates), inserting them in the given order.
Rational placingTriangulationVolume(const std::vector<RatVector>& pts, const std::vector<std::size_t>& order,
                                    std::size_t d) {
  if (d == 0) return 1;
  std::vector<RatVector> ordered;
  ordered.reserve(order.size());
  for (std::size_t i : order) ordered.push_back(pts[i]);
  const std::vector<std::size_t> start = detail::greedyAffineBasis(ordered);
  if (start.size() != d + 1) throw Error("placing triangulation: points are not full-dimensional");

  using Simplex = std::vector<std::size_t>;
  std::vector<Simplex> simplices{start};
  std::vector<bool> placed(ordered.size(), false);
  for (std::size_t i : start) placed[i] = true;

  for (std::size_t p = 0; p < ordered.size(); ++p) {
    if (placed[p]) continue;
    placed[p] = true;
    std::map<Simplex, std::pair<int, std::size_t>> faces;
    for (const Simplex& s : simplices)
      for (std::size_t omit = 0; omit <= d; ++omit) {
        Simplex f;
        for (std::size_t j = 0; j <= d; ++j)
          if (j != omit) f.push_back(s[j]);
        auto [it, inserted] = faces.try_emplace(f, 1, s[omit]);
        if (!inserted) ++it->second.first;
      }
    std::vector<Simplex> added;
    for (const auto& [face, info] : faces) {
      if (info.first != 1) continue;
      std::vector<const RatVector*> facePts;
      for (std::size_t j : face) facePts.push_back(&ordered[j]);
      const int opposite = sgn(orientation(facePts, ordered[info.second]));
      const int side = sgn(orientation(facePts, ordered[p]));
      if (side != 0 && side != opposite) {
        Simplex s = face;
        s.push_back(p);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    for (Simplex& s : added) simplices.push_back(std::move(s));
  }

  Rational total = 0;
  for (const Simplex& s : simplices) {
    RatMatrix m(d, d);
    for (std::size_t r = 1; r <= d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r - 1, c) = ordered[s[r]][c] - ordered[s[0]][c];
    total += abs(exactlin::determinant(std::move(m)));
  }
  return total;
}

}  // namespace

Rational latticeNormalizedVolume(const PolytopeV& p, const std::vector<std::size_t>& vertexOrder) {
  std::vector<RatVector> charted;
  charted.reserve(p.vertices().size());
  for (const RatVector& v : p.vertices()) charted.push_back(p.chart(v));
  const Rational euclidean = placingTriangulationVolume(charted, vertexOrder, p.affineDim());
  if (p.affineDim() == 0) return euclidean;
  return euclidean / abs(exactlin::determinant(latticeChartBasis(p)));
}

Rational latticeNormalizedVolume(const PolytopeV& p) {
  std::vector<std::size_t> order(p.vertices().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return latticeNormalizedVolume(p, order);
}

Integer latticePointCount(const PolytopeV& p, unsigned dilate, std::uint64_t budget) {
  requireIntegral(p, "latticePointCount");
  if (dilate == 0) return 1;
  const std::size_t d = p.affineDim();
  if (d == 0) return 1;
  const RatMatrix basis = latticeChartBasis(p);
  const Rational t = dilate;

  // Bounding box in lattice coordinates c, where the chart point is basis * c.
  std::vector<Integer> lo(d), hi(d);
  bool first = true;
  for (const RatVector& v : p.vertices()) {
    RatVector y = p.chart(v);
    for (Rational& q : y) q *= t;
    const auto c = exactlin::solveSquare(basis, y);
    if (!c) throw Error("latticePointCount: singular lattice basis");
    for (std::size_t i = 0; i < d; ++i) {
      Integer f, g;
      mpz_fdiv_q(f.get_mpz_t(), (*c)[i].get_num_mpz_t(), (*c)[i].get_den_mpz_t());
      mpz_cdiv_q(g.get_mpz_t(), (*c)[i].get_num_mpz_t(), (*c)[i].get_den_mpz_t());
      if (first || f < lo[i]) lo[i] = f;
      if (first || g > hi[i]) hi[i] = g;
    }
    first = false;
  }
  Integer boxSize = 1;
  for (std::size_t i = 0; i < d; ++i) boxSize *= hi[i] - lo[i] + 1;
  if (boxSize > Integer(std::to_string(budget)))
    throw ResourceError("latticePointCount: enumeration budget exceeded at dilate " + std::to_string(dilate));

  std::vector<Halfspace> facets = p.chartFacets();
  for (Halfspace& h : facets) h.offset *= t;

  Integer count = 0;
  std::vector<Integer> c = lo;
  RatVector y(d);
  while (true) {
    for (std::size_t r = 0; r < d; ++r) {
      Rational acc = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(basis(r, j)) != 0 && sgn(c[j]) != 0) acc += basis(r, j) * c[j];
      y[r] = acc;
    }
    bool inside = true;
    for (const Halfspace& h : facets)
      if (exactlin::dot(h.normal, y) > h.offset) {
        inside = false;
        break;
      }
    if (inside) ++count;
    std::size_t i = 0;
    while (i < d && c[i] == hi[i]) {
      c[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++c[i];
  }
  return count;
}

Rational evaluatePolynomial(const std::vector<Rational>& coefficients, const Rational& t) {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<Rational> ehrhartPolynomial(const PolytopeV& p, std::uint64_t budget) {
  const std::size_t d = p.affineDim();
  RatMatrix system(d + 1, d + 2);
  for (std::size_t t = 0; t <= d; ++t) {
    Rational power = 1;
    for (std::size_t j = 0; j <= d; ++j) {
      system(t, j) = power;
      power *= static_cast<unsigned long>(t);
    }
    system(t, d + 1) = latticePointCount(p, static_cast<unsigned>(t), budget);
  }
  const exactlin::RowEchelon e = exactlin::rref(system);
  std::vector<Rational> coefficients(d + 1);
  for (std::size_t j = 0; j <= d; ++j) coefficients[j] = e.reduced(j, d + 1);
  return coefficients;
}

}  // namespace mfields::polyhedra
