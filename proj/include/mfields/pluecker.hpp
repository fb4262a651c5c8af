#pragma once

// Pluecker forms and ideals, matching field ideals, toric degeneration
// tests, SAGBI bases, matching field polytopes and Newton-Okounkov bodies.

#include "mfields/matching_field.hpp"
#include "mfields/polyalg.hpp"
#include "mfields/polyhedra.hpp"

#include <string>
#include <vector>

namespace mfields::pluecker {

/// Index of x_(a,j) (1-based a, j) in the x-ring of an r x n matrix.
inline std::size_t xIndex(int a, int j, int n) { return static_cast<std::size_t>((a - 1) * n + (j - 1)); }

/// "x_(1,1)", "x_(1,2)", ... in row-major order.
std::vector<std::string> xLabels(int rows, int n);
/// "p_1" for singletons, "p_(1,2)" otherwise, in subsetOrder.
std::vector<std::string> plueckerLabels(const std::vector<int>& grades, int n);
std::string subsetLabel(const Subset& s);

struct PlueckerForm {
  Subset subset;
  /// det(X_I) on rows 1..|I| and columns I, terms in lex order.
  polyalg::Poly det;
  /// Unit vector of the subset's grade.
  std::vector<int> multidegree;
};

class PlueckerAlgebra {
 public:
  PlueckerAlgebra(std::vector<int> grades, int n);

  int n() const { return n_; }
  const std::vector<int>& grades() const { return grades_; }
  int rows() const { return grades_.back(); }
  std::size_t numXVariables() const { return static_cast<std::size_t>(rows() * n_); }
  /// One form per subset in subsetOrder.
  const std::vector<PlueckerForm>& forms() const { return forms_; }

 private:
  int n_;
  std::vector<int> grades_;
  std::vector<PlueckerForm> forms_;
};

inline constexpr std::size_t kDefaultPlueckerVariableCap = 35;
inline constexpr unsigned kDefaultDegreeCap = 12;

struct Options {
  /// Largest number of p-variables for which plueckerIdeal runs.
  std::size_t plueckerVariableCap = kDefaultPlueckerVariableCap;
  /// Largest x-degree of a lifted relation considered by sagbi.
  unsigned degreeCap = kDefaultDegreeCap;
  polyalg::GroebnerOptions groebner;
};

/// Kernel of p_I -> det(X_I), reduced grevlex basis in subsetOrder variables.
/// Throws ResourceError beyond the variable cap.
polyalg::Ideal plueckerIdeal(const std::vector<int>& grades, int n, const Options& options = {});

/// Kernel of p_I -> sign(T_I) x^{T_I}. Requires a coherent field.
polyalg::Ideal matchingFieldIdeal(const MatchingField& mf, const Options& options = {});

/// Weight order on the x-ring induced by a weight matrix, refined by grevlex.
polyalg::MonomialOrder weightMatrixOrder(const WeightMatrix& w);

enum class ToricMethod { Groebner, Volume, Subduction };
std::string toString(ToricMethod m);
/// Accepts "groebner", "volume" and "subduction".
ToricMethod parseToricMethod(const std::string& text);

bool isToricDegeneration(const MatchingField& mf, ToricMethod method = ToricMethod::Groebner,
                         const Options& options = {});

/// Minkowski sum over grades of the hulls of the tuple exponent matrices,
/// in R^{rows x n}.
polyhedra::PolytopeV matchingFieldPolytope(const MatchingField& mf);

struct SagbiGenerator {
  polyalg::Poly poly;
  /// Exponent of the leading monomial, row-major over the x-ring.
  std::vector<int> initialExponent;
  std::vector<int> multidegree;
};

enum class SagbiStatus { Complete, PartialAtDegreeCap };

struct SagbiResult {
  std::vector<SagbiGenerator> generators;
  SagbiStatus status = SagbiStatus::Complete;
};

/// SAGBI basis of the Pluecker algebra under the weight order of w refined
/// by grevlex. The initial terms of the forms must be induced without ties.
SagbiResult sagbi(const PlueckerAlgebra& pa, const WeightMatrix& w, const Options& options = {});

/// Remainder of f after subduction by the generators (zero when f lies in
/// the algebra they generate, as far as leading terms are concerned).
polyalg::Poly subduct(const polyalg::Poly& f, const std::vector<polyalg::Poly>& generators,
                      const polyalg::MonomialOrder& order);

struct NewtonOkounkovBody {
  polyhedra::PolytopeV polytope;
  /// Multidegrees of the SAGBI generators the points come from.
  std::vector<std::vector<int>> sourceDegrees;
};

/// {sum l_j e_j : l >= 0, sum l_j d_j = (1,...,1)} over the SAGBI generators
/// (initial exponent e_j, multidegree d_j). Throws ResourceError when the
/// SAGBI computation stops at the degree cap.
NewtonOkounkovBody newtonOkounkovBody(const MatchingField& mf, const Options& options = {});

}  // namespace mfields::pluecker
