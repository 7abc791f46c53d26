#include "coxforge/linalg.hpp"

#include <utility>

#include "coxforge/errors.hpp"

namespace coxforge {

IntegerMatrix to_integer_rows(const RationalMatrix& m) {
  IntegerMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer scale = 1;
    for (const auto& q : row) {
      if (q != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Integer> irow(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      Integer num = row[j].get_num() * scale;
      mpz_divexact(irow[j].get_mpz_t(), num.get_mpz_t(), row[j].get_den_mpz_t());
    }
    out.push_back(std::move(irow));
  }
  return out;
}

Echelon bareiss_echelon(IntegerMatrix m, std::size_t cols) {
  Echelon out;
  out.cols = cols;
  const std::size_t rows = m.size();
  std::size_t lead = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[lead]);
    const Integer& p = m[lead][col];
    for (std::size_t i = lead + 1; i < rows; ++i) {
      const Integer factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        Integer v = p * m[i][j] - factor * m[lead][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    // Columns left of `col` in rows below are already zero.
    prev = m[lead][col];
    out.pivots.push_back(col);
    ++lead;
  }
  m.resize(lead);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m, std::size_t cols) {
  return bareiss_echelon(to_integer_rows(m), cols).pivots.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m, std::size_t cols) {
  const Echelon ech = bareiss_echelon(to_integer_rows(m), cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols);
    x[free] = 1;
    for (std::size_t k = ech.pivots.size(); k-- > 0;) {
      const auto& row = ech.rows[k];
      const std::size_t pc = ech.pivots[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (row[j] != 0 && x[j] != 0) acc += Rational(row[j]) * x[j];
      }
      x[pc] = -acc / Rational(row[pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw PreconditionError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) throw PreconditionError("matrix is singular");
    std::swap(aug[pivot], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  RationalMatrix out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw PreconditionError("dimension mismatch in matrix-vector product");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

bool IncrementalSpan::reduce(RationalVector& v) const {
  if (v.size() != dim_) throw PreconditionError("vector dimension does not match span");
  for (const auto& [pivot, row] : basis_) {
    if (v[pivot] == 0) continue;
    const Rational f = v[pivot];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (row[j] != 0) v[j] -= f * row[j];
    }
  }
  for (const auto& q : v) {
    if (q != 0) return true;
  }
  return false;
}

bool IncrementalSpan::add(RationalVector v) {
  if (!reduce(v)) return false;
  std::size_t pivot = 0;
  while (v[pivot] == 0) ++pivot;
  const Rational inv = 1 / v[pivot];
  for (auto& q : v) q *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& [p, row] : basis_) {
    if (row[pivot] == 0) continue;
    const Rational f = row[pivot];
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * v[j];
  }
  basis_.emplace(pivot, std::move(v));
  return true;
}

bool IncrementalSpan::contains(RationalVector v) const { return !reduce(v); }

}  // namespace coxforge
