#pragma once

// Exact linear algebra over Q. Elimination is fraction-free (Bareiss) on
// integer-scaled rows; kernels are returned in reduced-echelon canonical form.

#include <cstddef>
#include <map>
#include <vector>

#include "coxforge/numbers.hpp"

namespace coxforge {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

struct Echelon {
  IntegerMatrix rows;             // row-echelon form, one row per pivot
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t cols = 0;
};

/// Clears denominators row by row.
IntegerMatrix to_integer_rows(const RationalMatrix& m);

/// Fraction-free Gaussian elimination. `cols` is needed when `m` has no rows.
Echelon bareiss_echelon(IntegerMatrix m, std::size_t cols);

std::size_t rank(const RationalMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}; one vector per free column with that entry 1 and the
/// other free entries 0.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m, std::size_t cols);

/// Inverse of a square nonsingular matrix. Throws PreconditionError when singular.
RationalMatrix inverse(const RationalMatrix& m);

RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

/// Maintains a reduced basis of a growing span.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}

  /// Adds v; returns true when the span grew.
  bool add(RationalVector v);
  std::size_t rank() const { return basis_.size(); }
  bool contains(RationalVector v) const;

 private:
  bool reduce(RationalVector& v) const;

  std::size_t dim_;
  std::map<std::size_t, RationalVector> basis_;  // pivot -> row with 1 at pivot
};

}  // namespace coxforge
