#pragma once

// Root system of T_{a,b,c} realized inside K-perp, Weyl group actions on
// divisor and curve classes, weight systems and degree-one classes.

#include <cstddef>
#include <string>
#include <vector>

#include "coxforge/lattice.hpp"

namespace coxforge {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

enum class DynkinType { A, D, E, Infinite };

struct DynkinLabel {
  DynkinType type;
  int rank;  // node count; 0 for Infinite

  std::string to_string() const;
  bool operator==(const DynkinLabel&) const = default;
};

/// Integer coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<Integer> coords;

  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& other) const { return coords < other.coords; }
};

/// Cartan matrix A (2 on the diagonal, -1 on edges) of a simply-laced diagram.
using CartanMatrix = std::vector<std::vector<int>>;

struct RootSystemData {
  LatticeContext ctx;
  std::vector<DivisorClass> simple_roots;
  DynkinLabel label;

  std::size_t size() const { return simple_roots.size(); }
  /// Gram matrix (alpha_i, alpha_j); -2 on the diagonal.
  std::vector<std::vector<Integer>> gram() const;
  CartanMatrix cartan() const;
};

/// E_i - E_{i+1} (i < r), H_1 - E_1 - ... - E_c, then H_{i+1} - H_i.
RootSystemData simple_roots(const LatticeContext& ctx);

bool is_finite_type(int a, int b, int c);
DynkinLabel dynkin_label(int a, int b, int c);

/// D + (D, alpha) alpha. Requires (alpha, alpha) = -2.
DivisorClass reflect(const DivisorClass& alpha, const DivisorClass& d);

/// Contragredient reflection on N_1: preserves intersect(s D, s g) = intersect(D, g).
CurveClass reflect_curve(const DivisorClass& alpha, const CurveClass& g);

/// Closure of {d} under all simple reflections, sorted.
std::vector<DivisorClass> weyl_orbit(const DivisorClass& d, const RootSystemData& rs,
                                     std::size_t cap = kDefaultOrbitCap);
std::vector<CurveClass> weyl_orbit(const CurveClass& g, const RootSystemData& rs,
                                   std::size_t cap = kDefaultOrbitCap);

/// Coordinate j is (D, alpha_j).
Weight weight_coords(const DivisorClass& d, const RootSystemData& rs);

struct KPerpProjection {
  std::vector<Rational> h;
  std::vector<Rational> m;  // same sign convention as DivisorClass
  Weight weight;
};

/// D - ((D,K)/(K,K)) K. Throws if (K,K) = 0.
KPerpProjection project_to_kperp(const DivisorClass& d, const RootSystemData& rs);

/// Positive roots in weight coordinates (simple root i is row i of the Cartan matrix).
std::vector<Weight> positive_roots(const CartanMatrix& cartan);

std::vector<Weight> weyl_orbit(const Weight& w, const CartanMatrix& cartan,
                               std::size_t cap = kDefaultOrbitCap);

/// All weights of the irreducible module with dominant highest weight `lambda`,
/// computed as the saturated set generated by lambda. Sorted.
std::vector<Weight> weights_of_irrep(const Weight& lambda, const CartanMatrix& cartan,
                                     std::size_t cap = kDefaultOrbitCap);
std::vector<Weight> weights_of_irrep(const Weight& lambda, const RootSystemData& rs,
                                     std::size_t cap = kDefaultOrbitCap);

/// omega_{r-1}, the weight of E_r.
Weight exceptional_weight(const RootSystemData& rs);

bool is_minuscule(const LatticeContext& ctx);

/// Classes of degree one projecting onto the weights of L_{omega_{r-1}}. Sorted.
std::vector<DivisorClass> degree_one_divisors(const LatticeContext& ctx);

}  // namespace coxforge
