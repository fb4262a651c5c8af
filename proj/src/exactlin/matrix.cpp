#include "mfields/error.hpp"
#include "mfields/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace mfields::exactlin {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::fromRows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InputError("RatMatrix::fromRows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

RatMatrix RatMatrix::fromIntRows(const std::vector<std::vector<long long>>& rows) {
  std::vector<RatVector> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) {
    RatVector v;
    v.reserve(row.size());
    for (long long x : row) v.emplace_back(static_cast<long>(x));
    converted.push_back(std::move(v));
  }
  return fromRows(converted);
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw InputError("RatMatrix: dimension mismatch in product");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

bool RatMatrix::isIntegral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

RowEchelon rref(const RatMatrix& m) {
  RowEchelon out{m, 0, {}};
  RatMatrix& a = out.reduced;
  std::size_t pivotRow = 0;
  for (std::size_t c = 0; c < a.cols() && pivotRow < a.rows(); ++c) {
    std::size_t sel = pivotRow;
    while (sel < a.rows() && sgn(a(sel, c)) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivotRow)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(pivotRow, j));
    const Rational inv = 1 / a(pivotRow, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(pivotRow, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivotRow || sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(pivotRow, j)) != 0) a(r, j) -= f * a(pivotRow, j);
    }
    out.pivots.push_back(c);
    ++pivotRow;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return rank(m);
}

std::vector<RatVector> rationalKernel(const RatMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : e.pivots) isPivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && sgn(m(sel, c)) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RatVector> solveSquare(RatMatrix m, RatVector b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw InputError("solveSquare: dimension mismatch");
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  const RowEchelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.reduced(r, n);
  return x;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  return acc;
}

RatVector toRational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const Integer& x : v) out.emplace_back(x);
  return out;
}

IntVector primitiveIntegerMultiple(const RatVector& v) {
  Integer l = 1;
  for (const Rational& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const Rational& q : v) {
    Integer x = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.push_back(std::move(x));
  }
  if (g > 1)
    for (Integer& x : out) x /= g;
  return out;
}

}  // namespace mfields::exactlin
