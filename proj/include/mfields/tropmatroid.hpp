#pragma once

// Matroid subdivisions of hypersimplices, algebraic matroids of matching
// fields, and tope fields with linkage and amalgamation.

#include "mfields/matching_field.hpp"

#include <cstdint>
#include <vector>

namespace mfields::tropmatroid {

/// Maximal cells of the regular subdivision of the hypersimplex Delta(k,n)
/// lifted by the Pluecker weight. Each cell lists its k-subsets in
/// subsetOrder; cells are sorted lexicographically by those positions.
std::vector<std::vector<Subset>> matroidSubdivision(const MatchingField& mf);

/// Basis exchange for a family of equal-size subsets.
bool satisfiesBasisExchange(const std::vector<Subset>& family);
/// True when every cell satisfies basis exchange.
bool isMatroidal(const std::vector<std::vector<Subset>>& cells);

inline constexpr std::size_t kDefaultGroundSetCap = 20;

struct MatroidOptions {
  std::size_t groundSetCap = kDefaultGroundSetCap;
  /// Largest number of label subsets examined by an enumeration.
  std::uint64_t enumerationBudget = 50'000'000;
};

/// Linear matroid over Q of a list of vectors, labelled by subsets.
class Matroid {
 public:
  Matroid(std::vector<Subset> labels, std::vector<RatVector> vectors);

  const std::vector<Subset>& groundLabels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return rank_; }
  /// Rank of the vectors at the given ground positions.
  std::size_t rankOf(const std::vector<std::size_t>& elements) const;
  bool isIndependent(const std::vector<std::size_t>& elements) const { return rankOf(elements) == elements.size(); }

  /// All bases as sorted ground positions, in lexicographic order.
  std::vector<std::vector<std::size_t>> bases(const MatroidOptions& options = {}) const;
  /// Minimal dependent sets by increasing size, lexicographic within a size.
  std::vector<std::vector<std::size_t>> circuits(const MatroidOptions& options = {}) const;

  /// Ground positions rendered as their labels.
  std::vector<Subset> labelsOf(const std::vector<std::size_t>& elements) const;

 private:
  std::vector<Subset> labels_;
  std::vector<RatVector> vectors_;
  std::size_t rank_ = 0;
};

/// Matroid of the tuple exponent vectors of a coherent Grassmannian field.
Matroid algebraicMatroid(const MatchingField& mf);

/// A family of topes: every s-subset of [n], s = sum of the type, carries a
/// tuple whose consecutive blocks have the sizes in the type. Blocks are
/// stored sorted.
class TopeField {
 public:
  TopeField(int n, std::vector<int> type, std::vector<Tuple> tuples);

  int n() const { return n_; }
  const std::vector<int>& type() const { return type_; }
  int size() const { return size_; }
  /// Subsets in revlex order, with tuples at the same positions.
  const std::vector<Subset>& subsets() const { return subsets_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  const Tuple& tupleOf(const Subset& s) const;

  /// Edges (element, block) of the tope at a position, blocks numbered from 1.
  std::vector<std::pair<int, int>> tope(std::size_t position) const;

 private:
  int n_;
  std::vector<int> type_;
  int size_;
  std::vector<Subset> subsets_;
  std::vector<Tuple> tuples_;
};

/// Tope field of type (1,...,1) of a Grassmannian matching field.
TopeField topeField(const MatchingField& mf);

/// For every (s+1)-subset S, the simple union of the topes on subsets of S
/// is a forest. Throws DomainError when s + 1 > n.
bool isLinkage(const TopeField& tf);

/// The i-th amalgamation (1-based block index) of a linkage tope field.
TopeField amalgamation(int i, const TopeField& tf);

}  // namespace mfields::tropmatroid
