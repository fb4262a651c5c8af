#pragma once

// Sparse multivariate polynomials over Q, monomial orders, Buchberger's
// algorithm, initial ideals, saturation and toric ideals.

#include "mfields/exactlin.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace mfields::polyalg {

inline constexpr std::size_t kMaxVariables = 64;

/// Exponent vector over at most kMaxVariables variables.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial fromExponents(const std::vector<int>& exponents);
  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  /// Bit i is set when variable i occurs.
  std::uint64_t support() const { return support_; }
  bool isOne() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }
  Monomial operator*(const Monomial& other) const;
  /// Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Moves variable i to i + offset (offset may be negative).
  Monomial shifted(int offset) const;
  std::vector<int> exponents(std::size_t numVariables) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator<(const Monomial& other) const { return exps_ < other.exps_; }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_;
  unsigned degree_ = 0;
  std::uint64_t support_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Weight, Block };

  /// Variables ordered x_0 > x_1 > ...
  static MonomialOrder grevlex();
  static MonomialOrder lex();
  /// Compares the grading degree first (standard degree when grading is
  /// empty), then ranks the smaller w-weight higher, then uses tieBreak.
  /// On homogeneous polynomials the leading term is thus a minimum-weight term.
  static MonomialOrder weight(const RatVector& w, const MonomialOrder& tieBreak = grevlex(),
                              const std::vector<long>& grading = {});
  /// Consecutive variable blocks compared left to right, each by its own order.
  static MonomialOrder block(std::vector<std::size_t> sizes, std::vector<MonomialOrder> inner);

  Kind kind() const { return kind_; }
  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const { return compareRange(a, b, 0, kMaxVariables); }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  /// Canonical text, used as a cache key.
  std::string description() const;

 private:
  int compareRange(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) const;

  Kind kind_ = Kind::Grevlex;
  std::vector<std::int64_t> weights_;
  std::vector<long> grading_;
  std::vector<std::size_t> blocks_;
  std::vector<MonomialOrder> inner_;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
  bool operator==(const Term& other) const = default;
};

/// Nonzero terms sorted by decreasing monomial under the order the
/// polynomial was built with. Arithmetic takes that order explicitly.
class Poly {
 public:
  Poly() = default;
  /// Combines like terms, drops zeros and sorts.
  Poly(std::vector<Term> terms, const MonomialOrder& order);
  static Poly fromMonomial(const Monomial& m, Rational c = 1);
  static Poly constant(Rational c);
  /// Precondition: terms sorted decreasingly, distinct monomials, no zeros.
  static Poly fromSorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leadingMonomial() const { return terms_.front().monomial; }
  const Rational& leadingCoefficient() const { return terms_.front().coefficient; }
  /// Maximum total degree of a term.
  unsigned degree() const;
  /// OR of the supports of all terms.
  std::uint64_t support() const;

  Poly sortedBy(const MonomialOrder& order) const { return Poly(terms_, order); }
  bool operator==(const Poly& other) const = default;

 private:
  std::vector<Term> terms_;
};

Poly add(const Poly& a, const Poly& b, const MonomialOrder& order);
Poly subtract(const Poly& a, const Poly& b, const MonomialOrder& order);
Poly multiply(const Poly& a, const Poly& b, const MonomialOrder& order);
/// c * m * f; term order is preserved.
Poly multiplyTerm(const Poly& f, const Monomial& m, const Rational& c);
Poly scale(const Poly& f, const Rational& c);
Poly monic(const Poly& f);
/// Substitutes images[i] for variable i.
Poly substitute(const Poly& f, const std::vector<Poly>& images, const MonomialOrder& order);
/// Moves every variable i to i + offset.
Poly shiftVariables(const Poly& f, int offset, const MonomialOrder& order);
/// Terms of minimal w-weight.
Poly initialForm(const Poly& f, const RatVector& w);

/// Terms in stored order, e.g. "p_(2,3)p_(1,4)-p_(1,3)p_(2,4)+p_(1,2)p_(3,4)".
std::string toString(const Poly& f, const std::vector<std::string>& labels);

inline constexpr std::uint64_t kDefaultReductionLimit = 1'000'000;

struct GroebnerOptions {
  /// Total number of reduction steps and S-pairs before ResourceError.
  std::uint64_t reductionLimit = kDefaultReductionLimit;
};

/// Reduced (monic, interreduced) Groebner basis sorted by increasing leading
/// monomial. Buchberger with the Gebauer-Moeller criteria and sugar selection.
std::vector<Poly> buchberger(const std::vector<Poly>& generators, const MonomialOrder& order,
                             const GroebnerOptions& options = {});

/// Full reduction of f modulo the given polynomials (all sorted under order).
Poly normalForm(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& order);

/// Ideal of a polynomial ring in a fixed number of variables. Generators are
/// kept sorted under grevlex; reduced bases are cached per order.
class Ideal {
 public:
  Ideal(std::size_t numVariables, std::vector<Poly> generators);

  std::size_t numVariables() const { return numVariables_; }
  const std::vector<Poly>& generators() const { return generators_; }
  bool isZero() const { return generators_.empty(); }

  const std::vector<Poly>& groebnerBasis(const MonomialOrder& order, const GroebnerOptions& options = {}) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Poly>> bases;
  };

  std::size_t numVariables_;
  std::vector<Poly> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced grevlex basis as generators.
Ideal canonicalIdeal(const Ideal& i, const GroebnerOptions& options = {});

/// Ideal generated by the w-initial forms of a Groebner basis under
/// weight(w, grevlex).
Ideal initialIdeal(const Ideal& i, const RatVector& w, const GroebnerOptions& options = {});

bool idealEquals(const Ideal& a, const Ideal& b, const MonomialOrder& order = MonomialOrder::grevlex(),
                 const GroebnerOptions& options = {});
/// True when every generator of b reduces to zero modulo a.
bool idealContains(const Ideal& a, const Ideal& b, const MonomialOrder& order = MonomialOrder::grevlex(),
                   const GroebnerOptions& options = {});

/// (i : (x_0 x_1 ... x_{n-1})^inf).
Ideal saturateByVariableProduct(const Ideal& i, const GroebnerOptions& options = {});

/// Kernel of p_j -> signs[j] * x^{columns[j]}.
Ideal toricIdeal(const std::vector<std::vector<int>>& columns, const std::vector<int>& signs,
                 const GroebnerOptions& options = {});

/// Kernel of p_j -> images[j]; images live in a ring of numSourceVariables.
Ideal eliminationKernel(const std::vector<Poly>& images, std::size_t numSourceVariables,
                        const GroebnerOptions& options = {});

}  // namespace mfields::polyalg
