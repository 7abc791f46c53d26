#pragma once

// Sections of dH - sum m_i E_i on Bl_r P^n as degree-d forms in z_0..z_n
// vanishing to order m_i at p_i = (1, a_i, ..., a_i^n). All arithmetic is exact.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "coxforge/blowup.hpp"
#include "coxforge/lattice.hpp"
#include "coxforge/linalg.hpp"
#include "coxforge/poly.hpp"

namespace coxforge {

class PointConfig {
 public:
  /// Throws unless n >= 2, r >= n + 3 and the parameters are pairwise distinct.
  PointConfig(int n, int r, std::vector<Rational> params);

  /// a_i = i.
  static PointConfig standard(int n, int r);
  /// Distinct random rationals drawn from a seeded generator.
  static PointConfig random(int n, int r, std::uint64_t seed);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<Rational>& params() const { return params_; }
  BlowupContext blowup() const { return BlowupContext(n_, r_); }
  LatticeContext lattice() const { return LatticeContext::blowup(n_, r_); }
  /// Homogeneous coordinates of p_i, 1-based.
  std::vector<Rational> point(int i) const;
  std::vector<std::string> variables() const;

  bool operator==(const PointConfig&) const = default;

 private:
  int n_;
  int r_;
  std::vector<Rational> params_;
};

struct FormSpace {
  int degree = -1;
  std::vector<Exponent> monomials;       // graded-lex descending
  RationalMatrix conditions;             // one row per vanishing condition
  std::vector<RationalVector> kernel;    // basis of H^0
};

FormSpace form_space(const DivisorClass& d, const PointConfig& cfg);

std::size_t h0(const DivisorClass& d, const PointConfig& cfg);

/// The unique section, leading graded-lex coefficient 1. Requires h0 = 1.
MultiPoly section_of(const DivisorClass& d, const PointConfig& cfg);

MultiPoly form_from_vector(const std::vector<Exponent>& monomials, const RationalVector& coeffs,
                           const std::vector<std::string>& vars);
/// Coordinates of a form of degree `monomials` over that basis.
RationalVector vector_from_form(const MultiPoly& f, const std::vector<Exponent>& monomials);

inline constexpr int kInfiniteMultiplicity = std::numeric_limits<int>::max();

/// Order of vanishing of the form at a point given in homogeneous coordinates.
int mult_at_point(const MultiPoly& f, const std::vector<Rational>& point);

/// Multiplicity at a general point of z_j = s^j.
int mult_along_curve(const MultiPoly& f, const PointConfig& cfg);

/// Lowest-order Taylor component at the point, over affine variables u<j>
/// (j ranging over the non-chart coordinates).
MultiPoly initial_form_at_point(const MultiPoly& f, const std::vector<Rational>& point);

struct GenerationCaps {
  int max_n = 4;
  std::size_t max_monomials = 20'000;
  std::size_t max_nodes = 100'000;
};

struct GenerationReport {
  std::size_t h0 = 0;
  std::size_t span_dim = 0;
  bool generated = false;
  std::size_t products = 0;  // multisets of generators visited with matching class
};

/// Spans H^0(D) by products of sections of minimal divisors, with exceptional
/// factors absorbing the remaining multiplicity.
class GenerationTester {
 public:
  explicit GenerationTester(PointConfig cfg, GenerationCaps caps = {});

  GenerationReport test(const DivisorClass& d) const;

  const std::vector<DivisorClass>& minimal() const { return minimal_; }
  const std::vector<MultiPoly>& sections() const { return sections_; }

 private:
  PointConfig cfg_;
  GenerationCaps caps_;
  std::vector<DivisorClass> minimal_;
  std::vector<MultiPoly> sections_;
};

GenerationReport generation_test(const DivisorClass& d, const PointConfig& cfg, GenerationCaps caps = {});

}  // namespace coxforge
