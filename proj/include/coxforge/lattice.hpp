#pragma once

// Picard lattice of X_{a,b,c}: the blow-up of (P^{c-1})^{a-1} at r = b + c
// points, with the Mukai form, the pairing against curve classes, the
// canonical class and the degree function.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "coxforge/numbers.hpp"

namespace coxforge {

class LatticeContext {
 public:
  /// Throws PreconditionError unless a >= 2, b >= 1, c >= 2 and (c > 2 or a > 2).
  LatticeContext(int a, int b, int c);

  /// Bl_r P^n, i.e. the context (2, r - n - 1, n + 1).
  static LatticeContext blowup(int n, int r);

  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  int r() const { return b_ + c_; }
  int rank() const { return a_ + b_ + c_ - 1; }
  int kappa() const { return a_ * c_ - a_ - c_; }
  /// Number of H coordinates, a - 1.
  int hyperplanes() const { return a_ - 1; }

  std::string to_string() const;

  bool operator==(const LatticeContext&) const = default;

 private:
  int a_;
  int b_;
  int c_;
};

/// D = sum_i h_i H_i - sum_j m_j E_j. The m_j are stored with that sign.
class DivisorClass {
 public:
  DivisorClass(LatticeContext ctx, std::vector<Integer> h, std::vector<Integer> m);

  static DivisorClass zero(const LatticeContext& ctx);
  /// 1-based: H_i, i in [1, a-1].
  static DivisorClass hyperplane(const LatticeContext& ctx, int i = 1);
  /// 1-based: E_j, j in [1, r].
  static DivisorClass exceptional(const LatticeContext& ctx, int j);
  /// a = 2 convenience: d H - sum m_j E_j.
  static DivisorClass from_hm(const LatticeContext& ctx, Integer d, std::vector<Integer> m);

  const LatticeContext& ctx() const { return ctx_; }
  const std::vector<Integer>& h() const { return h_; }
  const std::vector<Integer>& m() const { return m_; }
  const Integer& h(int i) const { return h_[i - 1]; }
  const Integer& m(int j) const { return m_[j - 1]; }

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass operator-() const;
  friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
  friend DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) { return lhs -= rhs; }
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d);

  bool operator==(const DivisorClass& other) const;
  /// Lexicographic on (h, m); contexts must agree.
  bool operator<(const DivisorClass& other) const;

  std::string to_string() const;

 private:
  LatticeContext ctx_;
  std::vector<Integer> h_;
  std::vector<Integer> m_;
};

/// g = sum_i l_i l_i + sum_j e_j e_j in N_1(X).
class CurveClass {
 public:
  CurveClass(LatticeContext ctx, std::vector<Integer> l, std::vector<Integer> e);

  static CurveClass line(const LatticeContext& ctx, int i = 1);
  static CurveClass exceptional_line(const LatticeContext& ctx, int j);

  const LatticeContext& ctx() const { return ctx_; }
  const std::vector<Integer>& l() const { return l_; }
  const std::vector<Integer>& e() const { return e_; }

  CurveClass& operator+=(const CurveClass& other);
  CurveClass& operator-=(const CurveClass& other);
  friend CurveClass operator+(CurveClass lhs, const CurveClass& rhs) { return lhs += rhs; }
  friend CurveClass operator-(CurveClass lhs, const CurveClass& rhs) { return lhs -= rhs; }
  friend CurveClass operator*(const Integer& k, const CurveClass& g);

  bool operator==(const CurveClass& other) const;
  bool operator<(const CurveClass& other) const;

  std::string to_string() const;

 private:
  LatticeContext ctx_;
  std::vector<Integer> l_;
  std::vector<Integer> e_;
};

/// Mukai form: (H_i,H_j) = c-1-delta_ij, (H_i,E_j) = 0, (E_i,E_j) = -delta_ij.
Integer pairing(const DivisorClass& lhs, const DivisorClass& rhs);

/// H_i.l_j = delta_ij, H_i.e_j = 0, E_i.l_j = 0, E_i.e_j = -delta_ij.
Integer intersect(const DivisorClass& d, const CurveClass& g);

/// The curve class g_D with intersect(X, g_D) = pairing(X, D) for every X.
CurveClass dual_curve(const DivisorClass& d);

DivisorClass canonical_class(const LatticeContext& ctx);
DivisorClass anticanonical_class(const LatticeContext& ctx);

/// (D, -K) / kappa, exact.
Rational degree(const DivisorClass& d);

/// The H coefficient of an a = 2 class.
Integer hdeg(const DivisorClass& d);

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& d) const;
};

struct CurveClassHash {
  std::size_t operator()(const CurveClass& g) const;
};

}  // namespace coxforge
