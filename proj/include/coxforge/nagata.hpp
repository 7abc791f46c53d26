#pragma once

// Determinant invariants F_I and J_i for the two-dimensional Nagata action
// y_i -> y_i + (t_1 + a_i t_2) x_i on C[x_1..x_r, y_1..y_r], and the torus
// grading that identifies invariants with divisor classes on Bl_{n+3} P^n.

#include <cstdint>
#include <string>
#include <vector>

#include "coxforge/lattice.hpp"
#include "coxforge/poly.hpp"

namespace coxforge {

class NagataParams {
 public:
  /// Throws unless r >= 5 and the parameters are pairwise distinct.
  explicit NagataParams(std::vector<Rational> params);

  static NagataParams standard(int r);
  static NagataParams random(int r, std::uint64_t seed);

  int r() const { return static_cast<int>(params_.size()); }
  const std::vector<Rational>& params() const { return params_; }
  const Rational& a(int i) const { return params_[i - 1]; }

  /// x1..xr, y1..yr, t1, t2.
  std::vector<std::string> variables() const;
  MultiPoly x(int i) const;
  MultiPoly y(int i) const;

 private:
  std::vector<Rational> params_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Laplace expansion along the first row, memoized on the remaining column set.
MultiPoly determinant(const PolyMatrix& m);

/// |I| = 2k+1: k+1 rows a_i^j x_i (j = 0..k) over k rows a_i^j y_i (j = 0..k-1).
/// Indices are 1-based.
MultiPoly build_F(const std::vector<int>& indices, const NagataParams& np);

MultiPoly nagata_substitute(const MultiPoly& p, const NagataParams& np);

bool is_invariant(const MultiPoly& p, const NagataParams& np);

struct TorusWeight {
  std::vector<int> w;  // joint (x_i, y_i) degree
  int deg_x = 0;
  int deg_y = 0;

  bool operator==(const TorusWeight&) const = default;
};

TorusWeight torus_weight(const MultiPoly& p, const NagataParams& np);

/// d = deg_y, m_i = d - w_i on Bl_{n+3} P^n; checks deg_x = (n+2) d - sum m_i.
DivisorClass divisor_class_of(const MultiPoly& p, const NagataParams& np, int n);

/// One J per reduced-echelon basis vector c of {sum c_i = 0, sum c_i a_i = 0}:
/// J = sum_i c_i y_i prod_{j != i} x_j.
std::vector<MultiPoly> build_J(const NagataParams& np, int n);

/// Every odd-cardinality subset of {1..r}, by size then lexicographically.
std::vector<std::vector<int>> odd_subsets(int r);

}  // namespace coxforge
