#include "mfields/error.hpp"
#include "mfields/exactlin.hpp"

#include <limits>

namespace mfields::exactlin {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau for: maximize cost . y subject to rows . y = rhs, y >= 0.
// Column `width` of every row holds the right-hand side.
class Tableau {
 public:
  Tableau(std::vector<RatVector> rows, std::vector<std::size_t> basis, std::size_t width)
      : rows_(std::move(rows)), basis_(std::move(basis)), width_(width) {}

  // Runs Bland's rule on the given costs. Columns flagged in `banned` never
  // enter. Returns the entering column of an unbounded direction, or kNone.
  std::size_t maximize(const RatVector& cost, const std::vector<bool>& banned) {
    RatVector reduced = reducedCosts(cost);
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < width_; ++j)
        if (!banned[j] && sgn(reduced[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rational bestRatio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (sgn(rows_[r][enter]) <= 0) continue;
        Rational ratio = rows_[r][width_] / rows_[r][enter];
        if (leave == kNone || ratio < bestRatio || (ratio == bestRatio && basis_[r] < basis_[leave])) {
          leave = r;
          bestRatio = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
      const Rational f = reduced[enter];
      for (std::size_t j = 0; j <= width_; ++j)
        if (sgn(rows_[leave][j]) != 0) reduced[j] -= f * rows_[leave][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    RatVector& p = rows_[r];
    const Rational inv = 1 / p[c];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j <= width_; ++j)
      if (sgn(p[j]) != 0) {
        p[j] *= inv;
        support.push_back(j);
      }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j : support) rows_[i][j] -= f * p[j];
    }
    basis_[r] = c;
  }

  RatVector solution() const {
    RatVector y(width_);
    for (std::size_t r = 0; r < rows_.size(); ++r) y[basis_[r]] = rows_[r][width_];
    return y;
  }

  RatVector direction(std::size_t enter) const {
    RatVector d(width_);
    d[enter] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) d[basis_[r]] -= rows_[r][enter];
    return d;
  }

  std::vector<RatVector>& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  RatVector reducedCosts(const RatVector& cost) const {
    RatVector reduced(width_ + 1);
    for (std::size_t j = 0; j < width_; ++j) reduced[j] = -cost[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j)
        if (sgn(rows_[r][j]) != 0) reduced[j] += cb * rows_[r][j];
    }
    return reduced;
  }

  std::vector<RatVector> rows_;
  std::vector<std::size_t> basis_;
  std::size_t width_;
};

}  // namespace

std::string toString(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

LpResult solveExactLP(const RatVector& objective, const std::vector<LinearConstraint>& constraints) {
  const std::size_t n = objective.size();
  for (const LinearConstraint& c : constraints)
    if (c.coefficients.size() != n) throw InputError("solveExactLP: constraint has wrong dimension");

  // Column layout: x+ (n), x- (n), one slack per inequality, one artificial per row.
  std::size_t slackCount = 0;
  for (const LinearConstraint& c : constraints)
    if (c.relation == Relation::LessEqual) ++slackCount;
  const std::size_t m = constraints.size();
  const std::size_t artificialStart = 2 * n + slackCount;
  const std::size_t width = artificialStart + m;

  std::vector<RatVector> rows(m, RatVector(width + 1));
  std::vector<std::size_t> basis(m, kNone);
  std::vector<bool> isArtificial(width, false);
  std::size_t slack = 2 * n;
  std::size_t artificialsUsed = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& c = constraints[i];
    const bool flip = sgn(c.rhs) < 0;
    RatVector& row = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = flip ? -c.coefficients[j] : c.coefficients[j];
      row[n + j] = -row[j];
    }
    row[width] = flip ? -c.rhs : c.rhs;
    if (c.relation == Relation::LessEqual) {
      row[slack] = flip ? -1 : 1;
      if (!flip) basis[i] = slack;
      ++slack;
    }
    if (basis[i] == kNone) {
      const std::size_t a = artificialStart + artificialsUsed++;
      row[a] = 1;
      basis[i] = a;
      isArtificial[a] = true;
    }
  }
  const std::size_t usedWidth = artificialStart + artificialsUsed;
  for (RatVector& row : rows) {
    row[usedWidth] = row[width];
    row.resize(usedWidth + 1);
  }
  isArtificial.resize(usedWidth);
  Tableau t(std::move(rows), std::move(basis), usedWidth);

  LpResult result;
  if (artificialsUsed > 0) {
    RatVector phaseOne(usedWidth);
    for (std::size_t j = 0; j < usedWidth; ++j)
      if (isArtificial[j]) phaseOne[j] = -1;
    t.maximize(phaseOne, std::vector<bool>(usedWidth, false));
    const RatVector y = t.solution();
    for (std::size_t j = 0; j < usedWidth; ++j)
      if (isArtificial[j] && sgn(y[j]) != 0) return result;  // infeasible
    // Drive zero-level artificials out of the basis or drop redundant rows.
    for (std::size_t r = 0; r < t.rows().size();) {
      if (!isArtificial[t.basis()[r]]) {
        ++r;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < usedWidth && col == kNone; ++j)
        if (!isArtificial[j] && sgn(t.rows()[r][j]) != 0) col = j;
      if (col != kNone) {
        t.pivot(r, col);
        ++r;
      } else {
        t.rows().erase(t.rows().begin() + static_cast<std::ptrdiff_t>(r));
        t.basis().erase(t.basis().begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  RatVector cost(usedWidth);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = objective[j];
    cost[n + j] = -objective[j];
  }
  const std::size_t unboundedColumn = t.maximize(cost, isArtificial);
  const RatVector y = t.solution();
  result.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.point[j] = y[j] - y[n + j];
  if (unboundedColumn != kNone) {
    result.status = LpStatus::Unbounded;
    const RatVector d = t.direction(unboundedColumn);
    result.ray.resize(n);
    for (std::size_t j = 0; j < n; ++j) result.ray[j] = d[j] - d[n + j];
    return result;
  }
  result.status = LpStatus::Optimal;
  result.value = dot(objective, result.point);
  return result;
}

}  // namespace mfields::exactlin
