#include "mfields/pluecker.hpp"

#include "mfields/error.hpp"

#include <algorithm>
#include <numeric>

namespace mfields::pluecker {

using polyalg::Monomial;
using polyalg::MonomialOrder;
using polyalg::Poly;
using polyalg::Term;

std::vector<std::string> xLabels(int rows, int n) {
  std::vector<std::string> out;
  for (int a = 1; a <= rows; ++a)
    for (int j = 1; j <= n; ++j) out.push_back("x_(" + std::to_string(a) + "," + std::to_string(j) + ")");
  return out;
}

std::string subsetLabel(const Subset& s) {
  if (s.size() == 1) return "p_" + std::to_string(s.front());
  std::string out = "p_(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::vector<std::string> plueckerLabels(const std::vector<int>& grades, int n) {
  std::vector<std::string> out;
  for (const Subset& s : subsetOrder(grades, n)) out.push_back(subsetLabel(s));
  return out;
}

PlueckerAlgebra::PlueckerAlgebra(std::vector<int> grades, int n) : n_(n), grades_(std::move(grades)) {
  validateGrades(grades_, n_);
  if (numXVariables() > polyalg::kMaxVariables) throw ResourceError("Pluecker algebra: too many x-variables");
  const MonomialOrder lex = MonomialOrder::lex();
  for (std::size_t g = 0; g < grades_.size(); ++g) {
    const int k = grades_[g];
    for (const Subset& s : revlexSubsets(k, n_)) {
      std::vector<int> perm(static_cast<std::size_t>(k));
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<Term> terms;
      do {
        Tuple t;
        for (int p : perm) t.push_back(s[static_cast<std::size_t>(p)]);
        Monomial m;
        for (int a = 0; a < k; ++a) m = m * Monomial::variable(xIndex(a + 1, t[static_cast<std::size_t>(a)], n_));
        terms.push_back({m, descents(perm) % 2 == 0 ? 1 : -1});
      } while (std::next_permutation(perm.begin(), perm.end()));
      std::vector<int> md(grades_.size());
      md[g] = 1;
      forms_.push_back({s, Poly(std::move(terms), lex), std::move(md)});
    }
  }
}

polyalg::Ideal plueckerIdeal(const std::vector<int>& grades, int n, const Options& options) {
  validateGrades(grades, n);
  const std::size_t m = subsetOrder(grades, n).size();
  if (m > options.plueckerVariableCap)
    throw ResourceError("plueckerIdeal: " + std::to_string(m) + " Pluecker variables exceed the cap of " +
                        std::to_string(options.plueckerVariableCap));
  const PlueckerAlgebra pa(grades, n);
  std::vector<Poly> images;
  for (const PlueckerForm& f : pa.forms()) images.push_back(f.det);
  return polyalg::eliminationKernel(images, pa.numXVariables(), options.groebner);
}

polyalg::Ideal matchingFieldIdeal(const MatchingField& mf, const Options& options) {
  getWeightMatrix(mf);
  std::vector<std::vector<int>> columns;
  std::vector<int> signs;
  for (const Tuple& t : mf.allTuples()) {
    TupleMonomial tm = tupleMonomial(t, mf.rows(), mf.n());
    columns.push_back(std::move(tm.exponent));
    signs.push_back(tm.sign);
  }
  return polyalg::toricIdeal(columns, signs, options.groebner);
}

MonomialOrder weightMatrixOrder(const WeightMatrix& w) {
  RatVector weights;
  for (const Integer& x : w.entries()) weights.emplace_back(x);
  return MonomialOrder::weight(weights);
}

polyhedra::PolytopeV matchingFieldPolytope(const MatchingField& mf) {
  std::vector<RatVector> sum;
  for (const auto& grade : mf.tuples()) {
    std::vector<RatVector> pts;
    for (const Tuple& t : grade) {
      const TupleMonomial tm = tupleMonomial(t, mf.rows(), mf.n());
      pts.emplace_back(tm.exponent.begin(), tm.exponent.end());
    }
    if (sum.empty()) {
      sum = polyhedra::PolytopeV(pts).vertices();
      continue;
    }
    const polyhedra::PolytopeV next(pts);
    sum = polyhedra::minkowskiSum(polyhedra::PolytopeV(sum), next).vertices();
  }
  return polyhedra::PolytopeV(sum);
}

std::string toString(ToricMethod m) {
  switch (m) {
    case ToricMethod::Groebner:
      return "groebner";
    case ToricMethod::Volume:
      return "volume";
    case ToricMethod::Subduction:
      return "subduction";
  }
  return "groebner";
}

ToricMethod parseToricMethod(const std::string& text) {
  if (text == "groebner") return ToricMethod::Groebner;
  if (text == "volume") return ToricMethod::Volume;
  if (text == "subduction") return ToricMethod::Subduction;
  throw InputError("unknown toric method '" + text + "' (expected groebner, volume or subduction)");
}

bool isToricDegeneration(const MatchingField& mf, ToricMethod method, const Options& options) {
  const WeightMatrix w = getWeightMatrix(mf);
  switch (method) {
    case ToricMethod::Groebner: {
      const polyalg::Ideal full = plueckerIdeal(mf.grades(), mf.n(), options);
      RatVector what;
      for (const Integer& x : plueckerWeight(mf)) what.emplace_back(x);
      const polyalg::Ideal initial = polyalg::initialIdeal(full, what, options.groebner);
      return polyalg::idealEquals(initial, matchingFieldIdeal(mf, options), MonomialOrder::grevlex(),
                                  options.groebner);
    }
    case ToricMethod::Volume: {
      const MatchingField diagonal = MatchingField::diagonal(mf.grades(), mf.n());
      return polyhedra::latticeNormalizedVolume(matchingFieldPolytope(mf)) ==
             polyhedra::latticeNormalizedVolume(matchingFieldPolytope(diagonal));
    }
    case ToricMethod::Subduction: {
      const PlueckerAlgebra pa(mf.grades(), mf.n());
      const MonomialOrder order = weightMatrixOrder(w);
      std::vector<Poly> forms;
      for (const PlueckerForm& f : pa.forms()) forms.push_back(f.det.sortedBy(order));
      const polyalg::Ideal toric = matchingFieldIdeal(mf, options);
      for (const Poly& g : toric.generators())
        if (!subduct(polyalg::substitute(g, forms, order), forms, order).isZero()) return false;
      return true;
    }
  }
  return false;
}

}  // namespace mfields::pluecker
