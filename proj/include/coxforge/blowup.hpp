#pragma once

// Bl_r P^n at points of a rational normal curve: minimal divisors, the
// projection from p_1, the multiplicity bound along the curve, table
// decomposition of effective classes, and effective-cone membership.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxforge/lattice.hpp"
#include "coxforge/roots.hpp"

namespace coxforge {

class BlowupContext {
 public:
  /// Throws unless n >= 2 and r >= n + 3.
  BlowupContext(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  int alpha() const { return r_ - n_ - 2; }
  LatticeContext lattice() const { return LatticeContext::blowup(n_, r_); }

  bool operator==(const BlowupContext&) const = default;

 private:
  int n_;
  int r_;
};

/// Shape k, I of a minimal divisor kH - k sum_I E_i - (k-1) sum_{I^c} E_i.
struct MinimalShape {
  int k;
  std::vector<int> support;  // I, 1-based, ascending

  bool operator==(const MinimalShape&) const = default;
};

DivisorClass minimal_divisor(const BlowupContext& bc, int k, const std::vector<int>& support);

/// Every minimal divisor: k ascending, I in lexicographic order.
std::vector<DivisorClass> enumerate_minimal(const BlowupContext& bc);

/// Returns the shape if `d` is a minimal divisor of `bc`.
std::optional<MinimalShape> minimal_shape(const DivisorClass& d, const BlowupContext& bc);

/// m_1 Hbar - sum_{i>=2} (m_i + m_1 - d) Ebar_i on Bl_{r-1} P^{n-1}. Needs n >= 3.
DivisorClass project_class(const DivisorClass& d, const BlowupContext& bc);

enum class ProjectionCase { Case0, Case1, Special };

std::string to_string(ProjectionCase c);

struct ProjectionResult {
  DivisorClass target;  // on Y = Bl_{r-1} P^{n-1}, points q_2..q_r
  ProjectionCase tag;
  int e_q_coefficient;  // k - 1 in Case1, 0 otherwise
  /// Case1: target - (k-1) E_q on Y' = Bl_r P^{n-1}; E_q is the last point.
  std::optional<DivisorClass> lifted;
};

ProjectionResult classify_minimal_projection(const DivisorClass& e, const BlowupContext& bc);

/// max(ceil((sum m_i - n d) / alpha), 0).
Integer mult_lower_bound(const DivisorClass& d, const BlowupContext& bc);

/// Column-wise reading of the table with n rows and d columns filled row-major
/// by m_1 copies of E_1, then m_2 copies of E_2, ...; one H - sum E class per column.
std::vector<DivisorClass> effective_decompose(const DivisorClass& d, const BlowupContext& bc);

struct MembershipResult {
  bool member;
  std::optional<CurveClass> certificate;  // a nef class with D.g < 0
};

/// Face inequalities of the effective cone of X_{a,b,c} for finite type: D.g >= 0
/// for g in the Weyl orbits of l_1 + ... + l_{a-1} - e_1 and l_{a-1}.
class EffectiveCone {
 public:
  explicit EffectiveCone(const LatticeContext& ctx, std::size_t cap = kDefaultOrbitCap);

  MembershipResult test(const DivisorClass& d) const;
  const std::vector<CurveClass>& faces() const { return faces_; }
  const LatticeContext& ctx() const { return ctx_; }

 private:
  LatticeContext ctx_;
  std::vector<CurveClass> faces_;
};

MembershipResult eff_membership(const DivisorClass& d, std::size_t cap = kDefaultOrbitCap);

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

/// A multiset of degree-one classes summing to `d`, or nullopt when none exists.
/// Throws CapExceeded if the search budget runs out first.
std::optional<std::vector<DivisorClass>> decompose_degree1(const DivisorClass& d,
                                                           std::size_t budget = kDefaultSearchBudget);

}  // namespace coxforge
