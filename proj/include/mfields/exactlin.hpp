#pragma once

// Exact rational and integer linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mfields {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

}  // namespace mfields

namespace mfields::exactlin {

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  /// All rows must have the same length; an empty list gives a 0x0 matrix.
  static RatMatrix fromRows(const std::vector<RatVector>& rows);
  static RatMatrix fromIntRows(const std::vector<std::vector<long long>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;
  RatVector operator*(const RatVector& v) const;

  bool isIntegral() const;
  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RatMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form.
RowEchelon rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols);

/// Basis of the rational kernel {v : m v = 0}, one vector per free column.
std::vector<RatVector> rationalKernel(const RatMatrix& m);

/// Determinant of a square matrix (fraction-free elimination over Q).
Rational determinant(RatMatrix m);

/// Solves m x = b for square invertible m; std::nullopt when singular.
std::optional<RatVector> solveSquare(RatMatrix m, RatVector b);

/// Row-style Hermite normal form: zero rows dropped, pivots positive,
/// entries above each pivot reduced into [0, pivot).
std::vector<IntVector> hermiteNormalForm(std::vector<IntVector> rows);

/// Sublattice of Z^d given by independent basis vectors kept in Hermite
/// normal form, so equal lattices compare equal.
class IntLattice {
 public:
  IntLattice(std::size_t ambientDim, std::vector<IntVector> generators);

  std::size_t ambientDim() const { return ambientDim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  /// Integer coordinates of v in the basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  bool operator==(const IntLattice& other) const = default;

 private:
  std::size_t ambientDim_;
  std::vector<IntVector> basis_;
};

/// Saturated integer kernel {v in Z^cols : m v = 0} of an integer matrix.
/// Throws InputError when m has a non-integral entry.
IntLattice kernelLatticeBasis(const RatMatrix& m);

// ---- exact linear programming ----

enum class Relation { LessEqual, Equal };

struct LinearConstraint {
  RatVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  /// Optimal point (Optimal) or a feasible point the ray starts from (Unbounded).
  RatVector point;
  /// Improving direction when Unbounded.
  RatVector ray;
  Rational value;
};

/// Maximizes objective . x over free variables x subject to the constraints,
/// by a two-phase tableau simplex with Bland's rule.
LpResult solveExactLP(const RatVector& objective, const std::vector<LinearConstraint>& constraints);

std::string toString(LpStatus status);

// ---- small helpers shared by other modules ----

Rational dot(const RatVector& a, const RatVector& b);
RatVector toRational(const IntVector& v);
/// Positive multiple of v that is integral with coprime entries (zero stays zero).
IntVector primitiveIntegerMultiple(const RatVector& v);

}  // namespace mfields::exactlin
