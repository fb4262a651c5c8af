#pragma once

#include "mfields/polyhedra.hpp"

#include <cstdint>
#include <vector>

namespace mfields::polyhedra::detail {

/// Fixed-size bitset over point indices.
class IndexSet {
 public:
  explicit IndexSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  IndexSet operator&(const IndexSet& o) const;
  bool isSubsetOf(const IndexSet& o) const;
  bool operator==(const IndexSet& o) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct HullFacet {
  Halfspace inequality;
  IndexSet incident;
};

/// Facets of the convex hull of points that affinely span R^dim, by
/// incremental double description inserting points in index order.
std::vector<HullFacet> fullDimensionalHull(const std::vector<RatVector>& points, std::size_t dim);

/// Indices (into points) of an affinely independent subset of maximal size,
/// chosen greedily in index order.
std::vector<std::size_t> greedyAffineBasis(const std::vector<RatVector>& points);

/// Normal of the hyperplane through dim affinely independent points in R^dim,
/// scaled to a primitive integer vector.
RatVector hyperplaneNormal(const std::vector<RatVector>& pts);

}  // namespace mfields::polyhedra::detail
