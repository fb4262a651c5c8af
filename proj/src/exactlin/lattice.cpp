#include "mfields/error.hpp"
#include "mfields/exactlin.hpp"

#include <utility>

namespace mfields::exactlin {
namespace {

bool isZero(const IntVector& v, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (sgn(v[i]) != 0) return false;
  return true;
}

void subtractMultiple(IntVector& target, const IntVector& source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < target.size(); ++i)
    if (sgn(source[i]) != 0) target[i] -= q * source[i];
}

// Unimodular row reduction restricted to columns [0, limit). Returns the
// number of pivot rows; rows at or after that index vanish on [0, limit).
std::size_t echelonize(std::vector<IntVector>& rows, std::size_t limit) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        subtractMultiple(rows[i], rows[r], q);
        if (sgn(rows[i][c]) != 0) others = true;
      }
      if (!others) break;
    }
    if (r >= rows.size() || sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (Integer& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      subtractMultiple(rows[i], rows[r], q);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<IntVector> hermiteNormalForm(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  const std::size_t r = echelonize(rows, width);
  rows.resize(r);
  return rows;
}

IntLattice::IntLattice(std::size_t ambientDim, std::vector<IntVector> generators) : ambientDim_(ambientDim) {
  for (const IntVector& g : generators)
    if (g.size() != ambientDim) throw InputError("IntLattice: generator has wrong length");
  basis_ = hermiteNormalForm(std::move(generators));
}

std::optional<IntVector> IntLattice::coordinates(const IntVector& v) const {
  if (v.size() != ambientDim_) throw InputError("IntLattice::coordinates: wrong length");
  IntVector rest = v;
  IntVector coords;
  coords.reserve(basis_.size());
  for (const IntVector& b : basis_) {
    std::size_t p = 0;
    while (sgn(b[p]) == 0) ++p;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), b[p].get_mpz_t())) return std::nullopt;
    Integer q = rest[p] / b[p];
    subtractMultiple(rest, b, q);
    coords.push_back(std::move(q));
  }
  if (!isZero(rest, 0, rest.size())) return std::nullopt;
  return coords;
}

IntLattice kernelLatticeBasis(const RatMatrix& m) {
  if (!m.isIntegral()) throw InputError("kernelLatticeBasis: matrix has non-integral entries");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Row j carries column j of m followed by the unit vector e_j; the
  // unimodular transform that echelonizes the first block leaves kernel
  // vectors in the second block of the vanishing rows.
  std::vector<IntVector> work(cols, IntVector(rows + cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) work[j][i] = m(i, j).get_num();
    work[j][rows + j] = 1;
  }
  const std::size_t r = echelonize(work, rows);
  std::vector<IntVector> kernel;
  for (std::size_t j = r; j < cols; ++j) kernel.emplace_back(work[j].begin() + static_cast<std::ptrdiff_t>(rows), work[j].end());
  return IntLattice(cols, std::move(kernel));
}

}  // namespace mfields::exactlin
