#include "mfields/polyalg.hpp"

#include "mfields/error.hpp"

#include <optional>

namespace mfields::polyalg {

using exactlin::LinearConstraint;
using exactlin::Relation;

namespace {

// Integral grading with every variable weight >= 1 under which all
// generators are homogeneous, if one exists.
std::optional<std::vector<long>> positiveGrading(const std::vector<Poly>& gens, std::size_t n) {
  std::vector<LinearConstraint> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    LinearConstraint c{RatVector(n), Relation::LessEqual, -1};
    c.coefficients[i] = -1;
    constraints.push_back(std::move(c));
  }
  for (const Poly& g : gens) {
    const Monomial& head = g.leadingMonomial();
    for (std::size_t k = 1; k < g.size(); ++k) {
      LinearConstraint c{RatVector(n), Relation::Equal, 0};
      for (std::size_t i = 0; i < n; ++i)
        c.coefficients[i] = static_cast<long>(head[i]) - static_cast<long>(g.terms()[k].monomial[i]);
      constraints.push_back(std::move(c));
    }
  }
  RatVector objective(n, Rational(-1));
  const exactlin::LpResult lp = exactlin::solveExactLP(objective, constraints);
  if (lp.status != exactlin::LpStatus::Optimal) return std::nullopt;
  const IntVector scaled = exactlin::primitiveIntegerMultiple(lp.point);
  std::vector<long> grading;
  for (const Integer& x : scaled) {
    if (!x.fits_slong_p() || x > 1'000'000) return std::nullopt;
    grading.push_back(x.get_si());
  }
  return grading;
}

Poly divideOutVariable(const Poly& g, std::size_t v) {
  unsigned e = UINT32_MAX;
  for (const Term& t : g.terms()) e = std::min(e, t.monomial[v]);
  if (e == 0) return g;
  return Poly::fromSorted([&] {
    std::vector<Term> out;
    const Monomial divisor = Monomial::variable(v, e);
    for (const Term& t : g.terms()) out.push_back({t.monomial / divisor, t.coefficient});
    return out;
  }());
}

Ideal saturateByElimination(const Ideal& i, std::uint64_t used, const GroebnerOptions& options) {
  const std::size_t n = i.numVariables();
  if (n + 1 > kMaxVariables) throw ResourceError("saturation needs one auxiliary variable beyond the supported count");
  const MonomialOrder order = MonomialOrder::block({1, n}, {MonomialOrder::grevlex(), MonomialOrder::grevlex()});
  std::vector<Poly> gens;
  for (const Poly& g : i.generators()) gens.push_back(shiftVariables(g, 1, order));
  Monomial product = Monomial::variable(0);
  for (std::size_t v = 0; v < n; ++v)
    if (used & (std::uint64_t{1} << v)) product = product * Monomial::variable(v + 1);
  gens.push_back(Poly({{Monomial(), 1}, {product, -1}}, order));
  std::vector<Poly> kept;
  for (const Poly& g : buchberger(gens, order, options))
    if (g.leadingMonomial()[0] == 0) kept.push_back(shiftVariables(g, -1, MonomialOrder::grevlex()));
  return Ideal(n, buchberger(kept, MonomialOrder::grevlex(), options));
}

}  // namespace

Ideal saturateByVariableProduct(const Ideal& i, const GroebnerOptions& options) {
  const std::size_t n = i.numVariables();
  if (i.isZero()) return i;
  std::uint64_t used = 0;
  for (const Poly& g : i.generators()) used |= g.support();

  const auto grading = positiveGrading(i.generators(), n);
  if (!grading) return saturateByElimination(i, used, options);

  // For a homogeneous ideal and an order that prefers fewer factors of v
  // among terms of equal degree, I : v^inf is generated by the Groebner
  // basis elements with v divided out.
  std::vector<Poly> gens = i.generators();
  for (std::size_t v = 0; v < n; ++v) {
    if (!(used & (std::uint64_t{1} << v))) continue;
    RatVector w(n);
    w[v] = 1;
    const MonomialOrder order = MonomialOrder::weight(w, MonomialOrder::grevlex(), *grading);
    std::vector<Poly> next;
    for (const Poly& g : buchberger(gens, order, options)) next.push_back(divideOutVariable(g, v));
    gens = std::move(next);
  }
  return Ideal(n, buchberger(gens, MonomialOrder::grevlex(), options));
}

Ideal toricIdeal(const std::vector<std::vector<int>>& columns, const std::vector<int>& signs,
                 const GroebnerOptions& options) {
  const std::size_t m = columns.size();
  if (signs.size() != m) throw InputError("toricIdeal: one sign per column is required");
  for (int s : signs)
    if (s != 1 && s != -1) throw InputError("toricIdeal: signs must be +1 or -1");
  if (m == 0) return Ideal(0, {});
  if (m > kMaxVariables) throw ResourceError("toricIdeal: too many columns (at most 64 are supported)");
  const std::size_t d = columns.front().size();
  exactlin::RatMatrix a(d, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (columns[j].size() != d) throw InputError("toricIdeal: columns have different lengths");
    for (std::size_t r = 0; r < d; ++r) a(r, j) = columns[j][r];
  }
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  std::vector<Poly> binomials;
  const exactlin::IntLattice lattice = exactlin::kernelLatticeBasis(a);
  for (const IntVector& u : lattice.basis()) {
    std::vector<int> plus(m), minus(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (!u[j].fits_sint_p()) throw ResourceError("toricIdeal: lattice basis entry too large");
      const int x = static_cast<int>(u[j].get_si());
      (x > 0 ? plus[j] : minus[j]) = std::abs(x);
    }
    binomials.push_back(Poly({{Monomial::fromExponents(plus), 1}, {Monomial::fromExponents(minus), -1}}, grevlex));
  }
  const Ideal saturated = saturateByVariableProduct(Ideal(m, std::move(binomials)), options);

  std::uint64_t negative = 0;
  for (std::size_t j = 0; j < m; ++j)
    if (signs[j] < 0) negative |= std::uint64_t{1} << j;
  std::vector<Poly> twisted;
  for (const Poly& g : saturated.generators()) {
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      unsigned parity = 0;
      for (std::uint64_t s = t.monomial.support() & negative; s; s &= s - 1)
        parity += t.monomial[static_cast<std::size_t>(__builtin_ctzll(s))];
      terms.push_back({t.monomial, parity % 2 ? Rational(-t.coefficient) : t.coefficient});
    }
    twisted.push_back(monic(Poly::fromSorted(std::move(terms))));
  }
  return Ideal(m, std::move(twisted));
}

Ideal eliminationKernel(const std::vector<Poly>& images, std::size_t numSourceVariables,
                        const GroebnerOptions& options) {
  const std::size_t nx = numSourceVariables;
  const std::size_t m = images.size();
  if (nx + m > kMaxVariables) throw ResourceError("eliminationKernel: too many variables (at most 64 are supported)");
  const MonomialOrder order = MonomialOrder::block({nx, m}, {MonomialOrder::grevlex(), MonomialOrder::grevlex()});
  std::vector<Poly> gens;
  for (std::size_t j = 0; j < m; ++j) {
    if (nx < 64 && (images[j].support() >> nx) != 0)
      throw InputError("eliminationKernel: image uses a variable outside the source ring");
    std::vector<Term> terms;
    for (const Term& t : images[j].terms()) terms.push_back({t.monomial, -t.coefficient});
    terms.push_back({Monomial::variable(nx + j), 1});
    gens.push_back(Poly(std::move(terms), order));
  }
  const std::uint64_t xMask = nx >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nx) - 1;
  std::vector<Poly> kernel;
  for (const Poly& g : buchberger(gens, order, options))
    if ((g.leadingMonomial().support() & xMask) == 0)
      kernel.push_back(shiftVariables(g, -static_cast<int>(nx), MonomialOrder::grevlex()));
  return Ideal(m, buchberger(kernel, MonomialOrder::grevlex(), options));
}

}  // namespace mfields::polyalg
