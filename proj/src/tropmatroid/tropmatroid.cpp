#include "mfields/tropmatroid.hpp"

#include "mfields/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace mfields::tropmatroid {

namespace {

std::uint64_t mask(const Subset& s) {
  std::uint64_t m = 0;
  for (int x : s) m |= std::uint64_t{1} << (x - 1);
  return m;
}

std::string render(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void requireGrassmannian(const MatchingField& mf, const char* what) {
  if (!mf.isGrassmannian()) throw InputError(std::string(what) + ": expected a Grassmannian matching field");
}

// Calls visit on every size-k subset of {0..n-1} as a sorted index list, in
// lexicographic order, charging the budget per subset.
template <class Visit>
void forEachCombination(std::size_t n, std::size_t k, std::uint64_t budget, const char* what, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  std::uint64_t spent = 0;
  while (true) {
    if (++spent > budget) throw ResourceError(std::string(what) + ": enumeration budget exceeded");
    visit(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Union-find over left vertices 1..n and right vertices n+1..n+s.
class Forest {
 public:
  explicit Forest(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::set<std::pair<int, int>> unionGraph(const TopeField& tf, std::uint64_t s) {
  std::set<std::pair<int, int>> edges;
  for (std::size_t p = 0; p < tf.subsets().size(); ++p) {
    if ((mask(tf.subsets()[p]) & ~s) != 0) continue;
    for (const auto& e : tf.tope(p)) edges.insert(e);
  }
  return edges;
}

bool isForest(const std::set<std::pair<int, int>>& edges, int n, int blocks) {
  Forest f(static_cast<std::size_t>(n + blocks + 1));
  for (const auto& [element, block] : edges)
    if (!f.join(static_cast<std::size_t>(element), static_cast<std::size_t>(n + block))) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Subset>> matroidSubdivision(const MatchingField& mf) {
  requireGrassmannian(mf, "matroidSubdivision");
  const IntVector w = plueckerWeight(mf);
  const std::vector<Subset> order = subsetOrder(mf.grades(), mf.n());
  std::vector<RatVector> points;
  RatVector heights;
  for (std::size_t i = 0; i < order.size(); ++i) {
    RatVector v(static_cast<std::size_t>(mf.n()));
    for (int x : order[i]) v[static_cast<std::size_t>(x - 1)] = 1;
    points.push_back(std::move(v));
    heights.emplace_back(w[i]);
  }
  std::vector<std::vector<Subset>> cells;
  for (const auto& cell : polyhedra::lowerHullCells(points, heights).cells) {
    std::vector<Subset> c;
    for (std::size_t i : cell) c.push_back(order[i]);
    cells.push_back(std::move(c));
  }
  return cells;
}

bool satisfiesBasisExchange(const std::vector<Subset>& family) {
  std::set<std::uint64_t> members;
  for (const Subset& s : family) members.insert(mask(s));
  for (std::uint64_t a : members)
    for (std::uint64_t b : members) {
      for (std::uint64_t x = a & ~b; x; x &= x - 1) {
        const std::uint64_t out = x & -x;
        bool found = false;
        for (std::uint64_t y = b & ~a; y && !found; y &= y - 1) found = members.count((a & ~out) | (y & -y)) > 0;
        if (!found) return false;
      }
    }
  return true;
}

bool isMatroidal(const std::vector<std::vector<Subset>>& cells) {
  return std::all_of(cells.begin(), cells.end(), satisfiesBasisExchange);
}

Matroid::Matroid(std::vector<Subset> labels, std::vector<RatVector> vectors)
    : labels_(std::move(labels)), vectors_(std::move(vectors)) {
  if (labels_.size() != vectors_.size()) throw InputError("Matroid: one vector per label is required");
  std::vector<std::size_t> all(labels_.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  rank_ = rankOf(all);
}

std::size_t Matroid::rankOf(const std::vector<std::size_t>& elements) const {
  if (elements.empty()) return 0;
  std::vector<RatVector> rows;
  for (std::size_t e : elements) rows.push_back(vectors_.at(e));
  return exactlin::rank(rows, rows.front().size());
}

std::vector<std::vector<std::size_t>> Matroid::bases(const MatroidOptions& options) const {
  if (size() > options.groundSetCap)
    throw ResourceError("algebraic matroid bases: ground set of " + std::to_string(size()) +
                        " elements exceeds the cap of " + std::to_string(options.groundSetCap));
  std::vector<std::vector<std::size_t>> out;
  forEachCombination(size(), rank_, options.enumerationBudget, "algebraic matroid bases",
                     [&](const std::vector<std::size_t>& c) {
                       if (isIndependent(c)) out.push_back(c);
                     });
  return out;
}

std::vector<std::vector<std::size_t>> Matroid::circuits(const MatroidOptions& options) const {
  if (size() > options.groundSetCap)
    throw ResourceError("algebraic matroid circuits: ground set of " + std::to_string(size()) +
                        " elements exceeds the cap of " + std::to_string(options.groundSetCap));
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::uint64_t> found;
  std::uint64_t remaining = options.enumerationBudget;
  for (std::size_t k = 1; k <= std::min(rank_ + 1, size()); ++k) {
    std::uint64_t spent = 0;
    forEachCombination(size(), k, remaining, "algebraic matroid circuits", [&](const std::vector<std::size_t>& c) {
      ++spent;
      std::uint64_t m = 0;
      for (std::size_t e : c) m |= std::uint64_t{1} << e;
      for (std::uint64_t f : found)
        if ((f & m) == f) return;
      if (!isIndependent(c)) {
        out.push_back(c);
        found.push_back(m);
      }
    });
    remaining -= spent;
  }
  return out;
}

std::vector<Subset> Matroid::labelsOf(const std::vector<std::size_t>& elements) const {
  std::vector<Subset> out;
  for (std::size_t e : elements) out.push_back(labels_.at(e));
  return out;
}

Matroid algebraicMatroid(const MatchingField& mf) {
  requireGrassmannian(mf, "algebraicMatroid");
  getWeightMatrix(mf);
  std::vector<Subset> labels;
  std::vector<RatVector> vectors;
  for (const Tuple& t : mf.allTuples()) {
    const TupleMonomial tm = tupleMonomial(t, mf.rows(), mf.n());
    labels.push_back(tm.subset);
    vectors.emplace_back(tm.exponent.begin(), tm.exponent.end());
  }
  return Matroid(std::move(labels), std::move(vectors));
}

TopeField::TopeField(int n, std::vector<int> type, std::vector<Tuple> tuples)
    : n_(n), type_(std::move(type)), size_(std::accumulate(type_.begin(), type_.end(), 0)) {
  if (type_.empty() || std::any_of(type_.begin(), type_.end(), [](int t) { return t < 1; }))
    throw InputError("TopeField: the type must be a nonempty list of positive integers");
  if (size_ > n_ || n_ > 64) throw InputError("TopeField: the type sum must lie between 1 and n <= 64");
  subsets_ = revlexSubsets(size_, n_);
  std::map<Subset, Tuple> bySubset;
  for (Tuple& t : tuples) {
    if (static_cast<int>(t.size()) != size_) throw InputError("TopeField: tuple " + render(t) + " has the wrong size");
    Subset s = t;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 1 || s.back() > n_)
      throw InputError("TopeField: tuple " + render(t) + " is not an ordering of a subset of [n]");
    std::size_t start = 0;
    for (int b : type_) {
      std::sort(t.begin() + static_cast<std::ptrdiff_t>(start), t.begin() + static_cast<std::ptrdiff_t>(start + b));
      start += static_cast<std::size_t>(b);
    }
    if (!bySubset.emplace(s, std::move(t)).second) throw InputError("TopeField: subset " + render(s) + " appears twice");
  }
  for (const Subset& s : subsets_) {
    auto it = bySubset.find(s);
    if (it == bySubset.end()) throw InputError("TopeField: no tuple for subset " + render(s));
    tuples_.push_back(std::move(it->second));
  }
}

const Tuple& TopeField::tupleOf(const Subset& s) const {
  const auto it = std::find(subsets_.begin(), subsets_.end(), s);
  if (it == subsets_.end()) throw InputError("TopeField: unknown subset " + render(s));
  return tuples_[static_cast<std::size_t>(it - subsets_.begin())];
}

std::vector<std::pair<int, int>> TopeField::tope(std::size_t position) const {
  const Tuple& t = tuples_.at(position);
  std::vector<std::pair<int, int>> edges;
  std::size_t at = 0;
  for (std::size_t b = 0; b < type_.size(); ++b)
    for (int j = 0; j < type_[b]; ++j) edges.emplace_back(t[at++], static_cast<int>(b + 1));
  return edges;
}

TopeField topeField(const MatchingField& mf) {
  requireGrassmannian(mf, "topeField");
  return TopeField(mf.n(), std::vector<int>(static_cast<std::size_t>(mf.rows()), 1), mf.allTuples());
}

bool isLinkage(const TopeField& tf) {
  if (tf.size() + 1 > tf.n()) throw DomainError("isLinkage: the type sum plus one exceeds n");
  const int blocks = static_cast<int>(tf.type().size());
  for (const Subset& s : revlexSubsets(tf.size() + 1, tf.n()))
    if (!isForest(unionGraph(tf, mask(s)), tf.n(), blocks)) return false;
  return true;
}

TopeField amalgamation(int i, const TopeField& tf) {
  const int blocks = static_cast<int>(tf.type().size());
  if (i < 1 || i > blocks)
    throw InputError("amalgamation: block index " + std::to_string(i) + " is outside 1.." + std::to_string(blocks));
  if (!isLinkage(tf)) throw DomainError("amalgamation: expected a linkage tope field");
  std::vector<int> target = tf.type();
  ++target[static_cast<std::size_t>(i - 1)];

  std::vector<Tuple> tuples;
  for (const Subset& s : revlexSubsets(tf.size() + 1, tf.n())) {
    // Left degree one on each element of S: pick one incident forest edge
    // per element and keep the picks whose right degree is the target.
    std::map<int, std::vector<int>> incident;
    for (const auto& [element, block] : unionGraph(tf, mask(s))) incident[element].push_back(block);
    std::vector<std::vector<int>> choices;
    for (int x : s) choices.push_back(incident[x]);
    std::vector<std::size_t> pick(s.size(), 0);
    std::optional<std::vector<int>> found;
    bool exhausted = std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
    while (!exhausted) {
      std::vector<int> degree(static_cast<std::size_t>(blocks));
      for (std::size_t e = 0; e < s.size(); ++e) ++degree[static_cast<std::size_t>(choices[e][pick[e]] - 1)];
      if (degree == target) {
        if (found) throw DomainError("amalgamation: the subgraph for " + render(s) + " is not unique");
        found.emplace();
        for (std::size_t e = 0; e < s.size(); ++e) found->push_back(choices[e][pick[e]]);
      }
      std::size_t e = 0;
      while (e < s.size() && ++pick[e] == choices[e].size()) pick[e++] = 0;
      exhausted = e == s.size();
    }
    if (!found) throw DomainError("amalgamation: no subgraph of the union forest fits " + render(s));
    Tuple t;
    for (int b = 1; b <= blocks; ++b)
      for (std::size_t e = 0; e < s.size(); ++e)
        if ((*found)[e] == b) t.push_back(s[e]);
    tuples.push_back(std::move(t));
  }
  return TopeField(tf.n(), std::move(target), std::move(tuples));
}

}  // namespace mfields::tropmatroid
