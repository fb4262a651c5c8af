#include "mfields/error.hpp"
#include "mfields/tropmatroid.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace mfields;
using namespace mfields::tropmatroid;

namespace {

// "134" -> {1,3,4}
Subset s(const std::string& digits) {
  Subset out;
  for (char c : digits) out.push_back(c - '0');
  return out;
}

std::vector<Subset> family(std::initializer_list<const char*> xs) {
  std::vector<Subset> out;
  for (const char* x : xs) out.push_back(s(x));
  return out;
}

std::set<std::set<Subset>> asSets(const std::vector<std::vector<Subset>>& cells) {
  std::set<std::set<Subset>> out;
  for (const auto& c : cells) out.emplace(c.begin(), c.end());
  return out;
}

MatchingField gr35() {
  return MatchingField::fromWeightMatrix(WeightMatrix::fromRows({{0, 0, 0, 0, 0}, {1, 3, 2, 5, 4}, {10, 0, 20, 40, 30}}));
}

MatchingField l3() { return MatchingField::fromTuples(2, 4, {{1, 2}, {1, 3}, {4, 1}, {2, 3}, {4, 2}, {3, 4}}); }

// Grassmannian tuples are edges x_(1,i) -- x_(2,j) of a bipartite graph on
// the used x-variables.
std::vector<std::pair<int, int>> incidenceEdges(const MatchingField& mf) {
  std::vector<std::pair<int, int>> edges;
  for (const Tuple& t : mf.allTuples()) edges.emplace_back(t[0], mf.n() + t[1]);
  return edges;
}

Rational spanningTrees(const std::vector<std::pair<int, int>>& edges) {
  std::map<int, std::size_t> index;
  for (auto [a, b] : edges) {
    index.emplace(a, index.size());
    index.emplace(b, index.size());
  }
  const std::size_t v = index.size();
  exactlin::RatMatrix lap(v - 1, v - 1);
  for (auto [a, b] : edges) {
    const std::size_t i = index[a], j = index[b];
    if (i + 1 < v) lap(i, i) += 1;
    if (j + 1 < v) lap(j, j) += 1;
    if (i + 1 < v && j + 1 < v) {
      lap(i, j) -= 1;
      lap(j, i) -= 1;
    }
  }
  return exactlin::determinant(lap);
}

// Edge subsets where every touched vertex has degree two and which are
// connected.
std::set<std::vector<std::size_t>> graphCycles(const std::vector<std::pair<int, int>>& edges) {
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << edges.size()); ++m) {
    std::map<int, int> degree;
    std::vector<std::size_t> chosen;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (m >> e & 1) {
        ++degree[edges[e].first];
        ++degree[edges[e].second];
        chosen.push_back(e);
      }
    if (!std::all_of(degree.begin(), degree.end(), [](const auto& d) { return d.second == 2; })) continue;
    std::set<int> reached{edges[chosen.front()].first};
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t e : chosen)
        if (reached.count(edges[e].first) != reached.count(edges[e].second)) {
          reached.insert(edges[e].first);
          reached.insert(edges[e].second);
          grew = true;
        }
    }
    if (reached.size() == degree.size()) out.insert(chosen);
  }
  return out;
}

}  // namespace

TEST(Tropmatroid, SubdivisionOfGr35) {
  const auto cells = matroidSubdivision(gr35());
  EXPECT_EQ(asSets(cells), asSets({family({"123", "124", "125", "234", "235", "134", "135"}),
                                   family({"124", "125", "234", "235", "245", "134", "135", "145"}),
                                   family({"234", "235", "245", "134", "135", "145", "345"})}));
  EXPECT_TRUE(isMatroidal(cells));
  for (const auto& c : cells) EXPECT_TRUE(satisfiesBasisExchange(c));
}

TEST(Tropmatroid, SubdivisionOfSmallCases) {
  const auto octahedron = matroidSubdivision(MatchingField::diagonal(2, 4));
  ASSERT_EQ(octahedron.size(), 2u);
  for (const auto& c : octahedron) {
    EXPECT_EQ(c.size(), 5u);
    EXPECT_TRUE(std::count(c.begin(), c.end(), s("14")) && std::count(c.begin(), c.end(), s("23")));
  }
  EXPECT_EQ(matroidSubdivision(MatchingField::diagonal(1, 5)).size(), 1u);
  EXPECT_EQ(matroidSubdivision(MatchingField::diagonal(1, 5)).front().size(), 5u);
  EXPECT_THROW(matroidSubdivision(l3()), DomainError);
  EXPECT_THROW(matroidSubdivision(MatchingField::diagonal(std::vector<int>{1, 2}, 3)), InputError);
}

TEST(Tropmatroid, BasisExchange) {
  EXPECT_TRUE(satisfiesBasisExchange(revlexSubsets(2, 4)));
  EXPECT_TRUE(satisfiesBasisExchange(revlexSubsets(3, 6)));
  EXPECT_FALSE(satisfiesBasisExchange(family({"12", "34"})));
  EXPECT_FALSE(isMatroidal({revlexSubsets(2, 4), family({"12", "34"})}));
}

TEST(Tropmatroid, AlgebraicMatroidOfGr26) {
  const Matroid m = algebraicMatroid(MatchingField::diagonal(2, 6));
  EXPECT_EQ(m.size(), 15u);
  EXPECT_EQ(m.rank(), 9u);
  const auto bases = m.bases();
  EXPECT_EQ(bases.size(), 576u);

  std::set<std::set<Subset>> circuits;
  const auto cs = m.circuits();
  for (const auto& c : cs) {
    const auto l = m.labelsOf(c);
    circuits.emplace(l.begin(), l.end());
  }
  for (const auto& expected : {family({"13", "14", "23", "24"}), family({"13", "15", "23", "25"}),
                               family({"14", "15", "24", "25"}), family({"14", "15", "34", "35"}),
                               family({"13", "15", "23", "24", "34", "35"}),
                               family({"13", "14", "23", "25", "34", "35"}), family({"24", "25", "34", "35"})})
    EXPECT_TRUE(circuits.count(std::set<Subset>(expected.begin(), expected.end())))
        << "missing circuit of size " << expected.size();

  // No circuit inside a basis, and every dependent rank-sized set holds one.
  std::set<std::uint64_t> basisMasks;
  for (const auto& b : bases) {
    std::uint64_t x = 0;
    for (std::size_t e : b) x |= std::uint64_t{1} << e;
    basisMasks.insert(x);
  }
  std::vector<std::uint64_t> circuitMasks;
  for (const auto& c : cs) {
    std::uint64_t x = 0;
    for (std::size_t e : c) x |= std::uint64_t{1} << e;
    circuitMasks.push_back(x);
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << 15); ++x) {
    if (__builtin_popcountll(x) != 9) continue;
    const bool hasCircuit =
        std::any_of(circuitMasks.begin(), circuitMasks.end(), [&](std::uint64_t c) { return (c & x) == c; });
    EXPECT_NE(hasCircuit, basisMasks.count(x) > 0);
  }

  std::vector<Subset> asFamily;
  for (std::uint64_t x : basisMasks) {
    Subset b;
    for (int e = 0; e < 15; ++e)
      if (x >> e & 1) b.push_back(e + 1);
    asFamily.push_back(b);
  }
  EXPECT_TRUE(satisfiesBasisExchange(asFamily));
}

TEST(Tropmatroid, AlgebraicMatroidOfSmallCases) {
  const Matroid free4 = algebraicMatroid(MatchingField::diagonal(1, 4));
  EXPECT_EQ(free4.rank(), 4u);
  EXPECT_TRUE(free4.circuits().empty());
  EXPECT_EQ(algebraicMatroid(MatchingField::diagonal(1, 3)).bases(),
            (std::vector<std::vector<std::size_t>>{{0, 1, 2}}));

  const MatchingField d24 = MatchingField::diagonal(2, 4);
  const Matroid m = algebraicMatroid(d24);
  EXPECT_EQ(m.rank(), 5u);
  EXPECT_EQ(Rational(static_cast<long>(m.bases().size())), spanningTrees(incidenceEdges(d24)));
  const auto cycles = graphCycles(incidenceEdges(d24));
  const auto circuits = m.circuits();
  EXPECT_EQ(std::set<std::vector<std::size_t>>(circuits.begin(), circuits.end()), cycles);
  for (const auto& c : circuits) EXPECT_EQ(c.size(), 4u);

  EXPECT_THROW(algebraicMatroid(l3()), DomainError);
  MatroidOptions tight;
  tight.groundSetCap = 5;
  EXPECT_THROW(m.bases(tight), ResourceError);
  MatroidOptions poor;
  poor.enumerationBudget = 3;
  EXPECT_THROW(m.circuits(poor), ResourceError);
}

TEST(Tropmatroid, TopeFieldAndAmalgamations) {
  const MatchingField mf = MatchingField::fromTuples(
      3, 5, {{1, 3, 2}, {1, 4, 2}, {1, 5, 2}, {3, 4, 1}, {1, 3, 5}, {1, 4, 5}, {3, 4, 2}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}});
  const TopeField tf = topeField(mf);
  EXPECT_EQ(tf.n(), 5);
  EXPECT_EQ(tf.type(), (std::vector<int>{1, 1, 1}));
  EXPECT_TRUE(isLinkage(tf));

  const TopeField a2 = amalgamation(2, tf);
  EXPECT_EQ(a2.type(), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(a2.tuples(), (std::vector<Tuple>{{1, 3, 4, 2}, {1, 3, 5, 2}, {1, 4, 5, 2}, {1, 3, 4, 5}, {2, 3, 4, 5}}));
  for (std::size_t p = 0; p < a2.subsets().size(); ++p) {
    std::vector<int> right(3);
    std::set<int> left;
    for (auto [element, block] : a2.tope(p)) {
      ++right[static_cast<std::size_t>(block - 1)];
      EXPECT_TRUE(left.insert(element).second);
    }
    EXPECT_EQ(right, a2.type());
    EXPECT_EQ(Subset(left.begin(), left.end()), a2.subsets()[p]);
  }

  const TopeField a3 = amalgamation(3, a2);
  EXPECT_EQ(a3.type(), (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(a3.tuples(), (std::vector<Tuple>{{1, 3, 4, 2, 5}}));
  EXPECT_THROW(amalgamation(4, a2), InputError);
}

TEST(Tropmatroid, LinkageOfSmallCases) {
  EXPECT_FALSE(isLinkage(topeField(l3())));
  EXPECT_THROW(amalgamation(1, topeField(l3())), DomainError);
  EXPECT_TRUE(isLinkage(topeField(MatchingField::diagonal(2, 4))));
  EXPECT_EQ(topeField(MatchingField::diagonal(2, 4)).type(), (std::vector<int>{1, 1}));

  const TopeField line = topeField(MatchingField::diagonal(1, 4));
  EXPECT_EQ(line.type(), (std::vector<int>{1}));
  EXPECT_TRUE(isLinkage(line));
  const TopeField pairs = amalgamation(1, line);
  EXPECT_EQ(pairs.type(), (std::vector<int>{2}));
  EXPECT_EQ(pairs.tuples(), revlexSubsets(2, 4));
  const TopeField full = amalgamation(1, topeField(MatchingField::diagonal(3, 4)));
  EXPECT_EQ(full.size(), 4);
  EXPECT_THROW(isLinkage(full), DomainError);
}
