#pragma once

// Grassmannian and flag matching fields: one ordering (tuple) of every
// subset of [n] whose size is a grade in J.

#include "mfields/exactlin.hpp"
#include "mfields/polyhedra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfields {

/// Ordered subset; entries are 1-based.
using Tuple = std::vector<int>;
/// Ascending subset of [n]; entries are 1-based.
using Subset = std::vector<int>;

/// Integer weight matrix; row a (0-based) weighs position a of a tuple.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols);
  static WeightMatrix fromRows(const std::vector<std::vector<long long>>& rows);
  static WeightMatrix fromIntegerRows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t a, std::size_t j) { return data_[a * cols_ + j]; }
  const Integer& operator()(std::size_t a, std::size_t j) const { return data_[a * cols_ + j]; }

  /// Row-major entries.
  const IntVector& entries() const { return data_; }
  std::vector<IntVector> rowVectors() const;

  bool operator==(const WeightMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

/// Subsets of size k of [n] in reverse lexicographic order (12, 13, 23, 14, ...).
std::vector<Subset> revlexSubsets(int k, int n);

/// All subsets of the given sizes: grouped by size ascending, revlex within a size.
std::vector<Subset> subsetOrder(const std::vector<int>& grades, int n);

/// Number of pairs a < b with t[a] > t[b].
int descents(const Tuple& t);

class MatchingField {
 public:
  /// Every tuple ascending; induced by the diagonal weight matrix.
  static MatchingField diagonal(std::vector<int> grades, int n);
  static MatchingField diagonal(int k, int n) { return diagonal(std::vector<int>{k}, n); }

  /// Grassmannian field induced by the permutation-twisted diagonal weight.
  static MatchingField fromPermutation(int k, int n, const std::vector<int>& sigma);

  /// Throws DomainError naming the first subset whose minimum is not unique.
  static MatchingField fromWeightMatrix(std::vector<int> grades, const WeightMatrix& w);
  /// Grassmannian case: k is the number of rows of w.
  static MatchingField fromWeightMatrix(const WeightMatrix& w);

  /// tuples[g] lists the tuples of grade grades[g] in any order.
  static MatchingField fromTuples(std::vector<int> grades, int n, const std::vector<std::vector<Tuple>>& tuples);
  static MatchingField fromTuples(int k, int n, const std::vector<Tuple>& tuples) {
    return fromTuples(std::vector<int>{k}, n, {tuples});
  }

  int n() const { return n_; }
  const std::vector<int>& grades() const { return grades_; }
  bool isGrassmannian() const { return grades_.size() == 1; }
  /// Number of weight matrix rows, max(J).
  int rows() const { return grades_.back(); }

  /// tuples()[g][i] is the tuple of the i-th subset of grade g in revlex order.
  const std::vector<std::vector<Tuple>>& tuples() const { return tuples_; }
  /// Tuples of all grades concatenated in subsetOrder.
  std::vector<Tuple> allTuples() const;
  /// Tuple of a given ascending subset.
  const Tuple& tupleOf(const Subset& s) const;

  const std::optional<WeightMatrix>& weight() const { return weight_; }
  /// Copy without the stored weight matrix.
  MatchingField withoutWeight() const;

  std::string description() const;

  /// Equal tuples (the stored weight is ignored).
  bool sameTuples(const MatchingField& other) const;

 private:
  MatchingField(int n, std::vector<int> grades, std::vector<std::vector<Tuple>> tuples,
                std::optional<WeightMatrix> weight);

  int n_ = 0;
  std::vector<int> grades_;
  std::vector<std::vector<Tuple>> tuples_;
  std::optional<WeightMatrix> weight_;
};

/// Tuples as nested brace lists, e.g. "{{1, 2}, {1, 3}, {2, 3}}"; flag
/// fields get one list per grade.
std::string formatTuples(const MatchingField& mf);

/// Per-position weight sum of a tuple under w.
Integer tupleWeight(const Tuple& t, const WeightMatrix& w);

struct TupleMonomial {
  Subset subset;
  /// rows x n 0/1 matrix, row-major; entry (a, t[a]-1) is 1.
  std::vector<int> exponent;
  int sign = 1;
};

TupleMonomial tupleMonomial(const Tuple& t, int rows, int n);

/// One inequality per tuple and non-identity reordering in R^{rows x n}.
polyhedra::ConeH weightMatrixCone(const MatchingField& mf);

bool isCoherent(const MatchingField& mf);

/// Stored weight, or an integral interior point of the weight matrix cone.
/// Throws DomainError("expected a coherent matching field") otherwise.
WeightMatrix getWeightMatrix(const MatchingField& mf);

/// Induced weight of each subset in subsetOrder.
IntVector plueckerWeight(const MatchingField& mf);

/// Validates grades: strictly increasing, within [1, n-1] (n = 1 is not allowed).
void validateGrades(const std::vector<int>& grades, int n);

}  // namespace mfields
