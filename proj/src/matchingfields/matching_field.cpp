#include "mfields/matching_field.hpp"

#include "mfields/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mfields {

namespace {

std::string subsetText(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

Subset sortedCopy(Tuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

WeightMatrix WeightMatrix::fromRows(const std::vector<std::vector<long long>>& rows) {
  std::vector<IntVector> converted;
  for (const auto& row : rows) {
    IntVector v;
    for (long long x : row) v.emplace_back(static_cast<long>(x));
    converted.push_back(std::move(v));
  }
  return fromIntegerRows(converted);
}

WeightMatrix WeightMatrix::fromIntegerRows(const std::vector<IntVector>& rows) {
  if (rows.empty() || rows.front().empty()) throw InputError("weight matrix must be nonempty");
  WeightMatrix w(rows.size(), rows.front().size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != w.cols_)
      throw InputError("weight matrix row " + std::to_string(a + 1) + " has " + std::to_string(rows[a].size()) +
                       " entries, expected " + std::to_string(w.cols_));
    for (std::size_t j = 0; j < w.cols_; ++j) w(a, j) = rows[a][j];
  }
  return w;
}

std::vector<IntVector> WeightMatrix::rowVectors() const {
  std::vector<IntVector> out(rows_);
  for (std::size_t a = 0; a < rows_; ++a)
    out[a].assign(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_));
  return out;
}

std::vector<Subset> revlexSubsets(int k, int n) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    Subset s;
    for (int i = 0; i < n; ++i)
      if (mask[static_cast<std::size_t>(i)]) s.push_back(i + 1);
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<Subset> subsetOrder(const std::vector<int>& grades, int n) {
  std::vector<Subset> out;
  for (int k : grades) {
    std::vector<Subset> s = revlexSubsets(k, n);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

int descents(const Tuple& t) {
  int c = 0;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (t[a] > t[b]) ++c;
  return c;
}

void validateGrades(const std::vector<int>& grades, int n) {
  if (n < 2) throw InputError("ground set size must be at least 2");
  if (grades.empty()) throw InputError("at least one grade is required");
  for (std::size_t i = 0; i < grades.size(); ++i) {
    if (grades[i] < 1 || grades[i] > n - 1)
      throw InputError("grade " + std::to_string(grades[i]) + " is outside [1, " + std::to_string(n - 1) + "]");
    if (i > 0 && grades[i] <= grades[i - 1]) throw InputError("grades must be strictly increasing");
  }
}

MatchingField::MatchingField(int n, std::vector<int> grades, std::vector<std::vector<Tuple>> tuples,
                             std::optional<WeightMatrix> weight)
    : n_(n), grades_(std::move(grades)), tuples_(std::move(tuples)), weight_(std::move(weight)) {}

MatchingField MatchingField::diagonal(std::vector<int> grades, int n) {
  validateGrades(grades, n);
  WeightMatrix w(static_cast<std::size_t>(grades.back()), static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < w.rows(); ++a)
    for (std::size_t j = 0; j < w.cols(); ++j) w(a, j) = static_cast<long>(a * (static_cast<std::size_t>(n) - j));
  std::vector<std::vector<Tuple>> tuples;
  for (int k : grades) tuples.push_back(revlexSubsets(k, n));
  return MatchingField(n, std::move(grades), std::move(tuples), std::move(w));
}

MatchingField MatchingField::fromPermutation(int k, int n, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != n) throw InputError("permutation must have n entries");
  std::vector<int> check = sigma;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i)
    if (check[static_cast<std::size_t>(i)] != i + 1) throw InputError("not a permutation of [n]");
  WeightMatrix w(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (std::size_t a = 1; a < w.rows(); ++a) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), a - 1);
    for (std::size_t j = 0; j < w.cols(); ++j)
      w(a, j) = (a == 1) ? Integer(sigma[j]) : Integer(scale * static_cast<long>(static_cast<std::size_t>(n) - 1 - j));
  }
  return fromWeightMatrix({k}, w);
}

MatchingField MatchingField::fromWeightMatrix(const WeightMatrix& w) {
  return fromWeightMatrix({static_cast<int>(w.rows())}, w);
}

MatchingField MatchingField::fromWeightMatrix(std::vector<int> grades, const WeightMatrix& w) {
  const int n = static_cast<int>(w.cols());
  validateGrades(grades, n);
  const std::size_t r = static_cast<std::size_t>(grades.back());
  if (w.rows() < r)
    throw InputError("weight matrix has " + std::to_string(w.rows()) + " rows, at least " + std::to_string(r) +
                     " are required");
  WeightMatrix kept(r, w.cols());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < w.cols(); ++j) kept(a, j) = w(a, j);

  std::vector<std::vector<Tuple>> tuples;
  for (int k : grades) {
    std::vector<Tuple> grade;
    for (const Subset& s : revlexSubsets(k, n)) {
      Tuple perm = s;
      Tuple best;
      Integer bestWeight;
      bool tie = false;
      do {
        Integer weight = tupleWeight(perm, kept);
        if (best.empty() || weight < bestWeight) {
          best = perm;
          bestWeight = weight;
          tie = false;
        } else if (weight == bestWeight) {
          tie = true;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (tie) throw DomainError("weight matrix does not induce a matching field: tie on subset " + subsetText(s));
      grade.push_back(std::move(best));
    }
    tuples.push_back(std::move(grade));
  }
  return MatchingField(n, std::move(grades), std::move(tuples), std::move(kept));
}

MatchingField MatchingField::fromTuples(std::vector<int> grades, int n,
                                        const std::vector<std::vector<Tuple>>& tuples) {
  validateGrades(grades, n);
  if (tuples.size() != grades.size())
    throw InputError("expected tuples for " + std::to_string(grades.size()) + " grades, got " +
                     std::to_string(tuples.size()));
  std::vector<std::vector<Tuple>> ordered;
  for (std::size_t g = 0; g < grades.size(); ++g) {
    const int k = grades[g];
    std::map<Subset, Tuple> bySubset;
    for (const Tuple& t : tuples[g]) {
      if (static_cast<int>(t.size()) != k)
        throw InputError("tuple " + subsetText(t) + " does not have " + std::to_string(k) + " entries");
      Subset s = sortedCopy(t);
      if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 1 || s.back() > n)
        throw InputError("tuple " + subsetText(t) + " is not an ordering of a subset of [" + std::to_string(n) + "]");
      if (!bySubset.emplace(s, t).second) throw InputError("duplicate tuple for subset " + subsetText(s));
    }
    std::vector<Tuple> grade;
    for (const Subset& s : revlexSubsets(k, n)) {
      auto it = bySubset.find(s);
      if (it == bySubset.end()) throw InputError("missing subset " + subsetText(s));
      grade.push_back(it->second);
    }
    ordered.push_back(std::move(grade));
  }
  return MatchingField(n, std::move(grades), std::move(ordered), std::nullopt);
}

std::vector<Tuple> MatchingField::allTuples() const {
  std::vector<Tuple> out;
  for (const auto& grade : tuples_) out.insert(out.end(), grade.begin(), grade.end());
  return out;
}

const Tuple& MatchingField::tupleOf(const Subset& s) const {
  for (std::size_t g = 0; g < grades_.size(); ++g) {
    if (static_cast<int>(s.size()) != grades_[g]) continue;
    for (const Tuple& t : tuples_[g])
      if (sortedCopy(t) == s) return t;
  }
  throw InputError("subset " + subsetText(s) + " is not part of the matching field");
}

MatchingField MatchingField::withoutWeight() const { return MatchingField(n_, grades_, tuples_, std::nullopt); }

std::string MatchingField::description() const {
  std::ostringstream os;
  if (isGrassmannian()) {
    os << "Grassmannian Matching Field for Gr(" << grades_.front() << ", " << n_ << ")";
  } else {
    os << "Flag Matching Field for Fl(";
    for (std::size_t i = 0; i < grades_.size(); ++i) os << (i ? ", " : "") << grades_[i];
    os << "; " << n_ << ")";
  }
  return os.str();
}

std::string formatTuples(const MatchingField& mf) {
  auto list = [](const Tuple& t) {
    std::string out = "{";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + std::to_string(t[i]);
    return out + "}";
  };
  auto grade = [&](const std::vector<Tuple>& ts) {
    std::string out = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? ", " : "") + list(ts[i]);
    return out + "}";
  };
  if (mf.isGrassmannian()) return grade(mf.tuples().front());
  std::string out = "{";
  for (std::size_t g = 0; g < mf.tuples().size(); ++g) out += (g ? ", " : "") + grade(mf.tuples()[g]);
  return out + "}";
}

bool MatchingField::sameTuples(const MatchingField& other) const {
  return n_ == other.n_ && grades_ == other.grades_ && tuples_ == other.tuples_;
}

Integer tupleWeight(const Tuple& t, const WeightMatrix& w) {
  Integer sum = 0;
  for (std::size_t a = 0; a < t.size(); ++a) sum += w(a, static_cast<std::size_t>(t[a] - 1));
  return sum;
}

TupleMonomial tupleMonomial(const Tuple& t, int rows, int n) {
  TupleMonomial m;
  m.subset = sortedCopy(t);
  m.exponent.assign(static_cast<std::size_t>(rows * n), 0);
  for (std::size_t a = 0; a < t.size(); ++a) m.exponent[a * static_cast<std::size_t>(n) + static_cast<std::size_t>(t[a] - 1)] = 1;
  m.sign = descents(t) % 2 == 0 ? 1 : -1;
  return m;
}

polyhedra::ConeH weightMatrixCone(const MatchingField& mf) {
  const std::size_t n = static_cast<std::size_t>(mf.n());
  polyhedra::ConeH cone;
  cone.ambientDim = static_cast<std::size_t>(mf.rows()) * n;
  for (const Tuple& t : mf.allTuples()) {
    Tuple perm = sortedCopy(t);
    do {
      if (perm == t) continue;
      RatVector a(cone.ambientDim);
      for (std::size_t pos = 0; pos < t.size(); ++pos) {
        a[pos * n + static_cast<std::size_t>(t[pos] - 1)] += 1;
        a[pos * n + static_cast<std::size_t>(perm[pos] - 1)] -= 1;
      }
      cone.inequalities.push_back(std::move(a));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return cone;
}

bool isCoherent(const MatchingField& mf) {
  if (mf.weight()) return true;
  // The cone has no equations, so it is full-dimensional exactly when some
  // point satisfies every inequality strictly.
  return polyhedra::interiorPoint(weightMatrixCone(mf)).has_value();
}

WeightMatrix getWeightMatrix(const MatchingField& mf) {
  if (mf.weight()) return *mf.weight();
  const auto x = polyhedra::interiorPoint(weightMatrixCone(mf));
  if (!x) throw DomainError(kNotCoherentMessage);
  const std::size_t n = static_cast<std::size_t>(mf.n());
  WeightMatrix w(static_cast<std::size_t>(mf.rows()), n);
  for (std::size_t a = 0; a < w.rows(); ++a)
    for (std::size_t j = 0; j < n; ++j) w(a, j) = (*x)[a * n + j];
  return w;
}

IntVector plueckerWeight(const MatchingField& mf) {
  const WeightMatrix w = getWeightMatrix(mf);
  IntVector out;
  for (const Tuple& t : mf.allTuples()) out.push_back(tupleWeight(t, w));
  return out;
}

}  // namespace mfields
