#include "mfields/pluecker.hpp"

#include "mfields/error.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace mfields::pluecker {

using polyalg::Monomial;
using polyalg::MonomialOrder;
using polyalg::Poly;

namespace {

// Subduction against a growing list of generators, with cached products and
// memoized semigroup membership of leading monomials.
class Subductor {
 public:
  explicit Subductor(const MonomialOrder& order) : order_(order) {}

  void add(const Poly& g) {
    gens_.push_back(g);
    leads_.push_back(g.leadingMonomial());
    failedFrom_.clear();
  }

  std::size_t size() const { return gens_.size(); }

  std::optional<std::vector<int>> decompose(const Monomial& u) {
    std::vector<int> alpha(gens_.size());
    if (search(u, 0, alpha)) return alpha;
    return std::nullopt;
  }

  // Product of generator powers scaled to leading coefficient one.
  const Poly& product(const std::vector<int>& alpha) {
    auto it = products_.find(alpha);
    if (it != products_.end()) return it->second;
    Poly p = Poly::constant(1);
    for (std::size_t j = 0; j < alpha.size(); ++j)
      for (int e = 0; e < alpha[j]; ++e) p = polyalg::multiply(p, gens_[j], order_);
    return products_.emplace(alpha, polyalg::monic(p)).first->second;
  }

  Poly reduce(Poly f) {
    while (!f.isZero()) {
      const auto alpha = decompose(f.leadingMonomial());
      if (!alpha) return f;
      f = polyalg::subtract(f, polyalg::scale(product(*alpha), f.leadingCoefficient()), order_);
    }
    return f;
  }

 private:
  bool search(const Monomial& u, std::size_t start, std::vector<int>& alpha) {
    if (u.isOne()) return true;
    auto memo = failedFrom_.find(u);
    if (memo != failedFrom_.end() && memo->second <= start) return false;
    for (std::size_t j = start; j < leads_.size(); ++j) {
      if (!leads_[j].divides(u)) continue;
      ++alpha[j];
      if (search(u / leads_[j], j, alpha)) return true;
      --alpha[j];
    }
    auto [pos, inserted] = failedFrom_.emplace(u, start);
    if (!inserted) pos->second = std::min(pos->second, start);
    return false;
  }

  MonomialOrder order_;
  std::vector<Poly> gens_;
  std::vector<Monomial> leads_;
  std::map<Monomial, std::size_t> failedFrom_;
  std::map<std::vector<int>, Poly> products_;
};

std::vector<int> addScaled(std::vector<int> acc, const std::vector<int>& v, int times) {
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += times * v[i];
  return acc;
}

}  // namespace

Poly subduct(const Poly& f, const std::vector<Poly>& generators, const MonomialOrder& order) {
  Subductor s(order);
  for (const Poly& g : generators)
    if (!g.isZero()) s.add(g.sortedBy(order));
  return s.reduce(f.sortedBy(order));
}

SagbiResult sagbi(const PlueckerAlgebra& pa, const WeightMatrix& w, const Options& options) {
  if (static_cast<int>(w.rows()) != pa.rows() || static_cast<int>(w.cols()) != pa.n())
    throw InputError("sagbi: weight matrix shape does not match the Pluecker algebra");
  const std::size_t nx = pa.numXVariables();
  const MonomialOrder order = weightMatrixOrder(w);
  RatVector weights;
  for (const Integer& x : w.entries()) weights.emplace_back(x);

  SagbiResult result;
  Subductor subductor(order);
  for (const PlueckerForm& f : pa.forms()) {
    Poly det = f.det.sortedBy(order);
    if (polyalg::initialForm(det, weights).size() != 1)
      throw DomainError("weight matrix has a tie on the initial term of det(X_" + subsetLabel(f.subset).substr(2) + ")");
    result.generators.push_back({det, det.leadingMonomial().exponents(nx), f.multidegree});
    subductor.add(det);
  }

  while (true) {
    std::vector<std::vector<int>> columns;
    for (const SagbiGenerator& g : result.generators) columns.push_back(g.initialExponent);
    const polyalg::Ideal relations =
        polyalg::toricIdeal(columns, std::vector<int>(columns.size(), 1), options.groebner);

    std::vector<SagbiGenerator> added;
    bool skipped = false;
    for (const Poly& b : relations.generators()) {
      if (b.size() != 2) throw Error("sagbi: toric relation is not a binomial");
      const std::vector<int> a = b.terms()[0].monomial.exponents(columns.size());
      const std::vector<int> c = b.terms()[1].monomial.exponents(columns.size());
      unsigned degree = 0;
      std::vector<int> mdA(pa.grades().size()), mdC(pa.grades().size());
      for (std::size_t j = 0; j < columns.size(); ++j) {
        degree += static_cast<unsigned>(a[j]) * result.generators[j].poly.degree();
        mdA = addScaled(mdA, result.generators[j].multidegree, a[j]);
        mdC = addScaled(mdC, result.generators[j].multidegree, c[j]);
      }
      if (mdA != mdC) throw Error("sagbi: lifted relation is not multihomogeneous");
      if (degree > options.degreeCap) {
        skipped = true;
        continue;
      }
      const Poly lift = polyalg::subtract(subductor.product(a), subductor.product(c), order);
      Poly r = subductor.reduce(lift);
      if (r.isZero()) continue;
      r = polyalg::monic(r);
      subductor.add(r);
      added.push_back({r, r.leadingMonomial().exponents(nx), mdA});
    }
    if (added.empty()) {
      result.status = skipped ? SagbiStatus::PartialAtDegreeCap : SagbiStatus::Complete;
      return result;
    }
    std::sort(added.begin(), added.end(), [](const SagbiGenerator& x, const SagbiGenerator& y) {
      return std::tie(x.multidegree, x.initialExponent) < std::tie(y.multidegree, y.initialExponent);
    });
    // Products are cached by generator position, so rebuild in the new order.
    for (SagbiGenerator& g : added) result.generators.push_back(std::move(g));
    subductor = Subductor(order);
    for (const SagbiGenerator& g : result.generators) subductor.add(g.poly);
  }
}

NewtonOkounkovBody newtonOkounkovBody(const MatchingField& mf, const Options& options) {
  const WeightMatrix w = getWeightMatrix(mf);
  const SagbiResult s = sagbi(PlueckerAlgebra(mf.grades(), mf.n()), w, options);
  if (s.status != SagbiStatus::Complete)
    throw ResourceError("Newton-Okounkov body is inconclusive: the SAGBI computation stopped at degree cap " +
                        std::to_string(options.degreeCap));

  NewtonOkounkovBody body{polyhedra::PolytopeV({RatVector{0}}), {}};
  std::vector<RatVector> points;
  const std::size_t g = mf.grades().size();
  const std::size_t m = s.generators.size();
  // Basic solutions of {D l = 1, l >= 0}: supports of size g with an
  // invertible column submatrix.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(g, m)), true);
  do {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < m; ++j)
      if (pick[j]) support.push_back(j);
    exactlin::RatMatrix d(g, support.size());
    for (std::size_t c = 0; c < support.size(); ++c)
      for (std::size_t r = 0; r < g; ++r) d(r, c) = s.generators[support[c]].multidegree[r];
    const auto lambda = exactlin::solveSquare(d, RatVector(g, Rational(1)));
    if (!lambda) continue;
    bool nonnegative = true;
    for (const Rational& l : *lambda) nonnegative = nonnegative && sgn(l) >= 0;
    if (!nonnegative) continue;
    RatVector p(s.generators.front().initialExponent.size());
    for (std::size_t c = 0; c < support.size(); ++c) {
      const auto& e = s.generators[support[c]].initialExponent;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += (*lambda)[c] * e[i];
    }
    points.push_back(std::move(p));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  body.polytope = polyhedra::PolytopeV(std::move(points));
  for (const SagbiGenerator& gen : s.generators) body.sourceDegrees.push_back(gen.multidegree);
  return body;
}

}  // namespace mfields::pluecker
