#include "coxforge/roots.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "coxforge/errors.hpp"
#include "coxforge/linalg.hpp"

namespace coxforge {

namespace {

void require_finite(const LatticeContext& ctx) {
  if (!is_finite_type(ctx.a(), ctx.b(), ctx.c())) {
    throw PreconditionError("context " + ctx.to_string() + " is not of finite type");
  }
}

// Rejects root coordinates that are not of norm -2 once, up front.
void require_root(const DivisorClass& alpha) {
  if (pairing(alpha, alpha) != -2) {
    throw PreconditionError("reflection vector " + alpha.to_string() + " does not have norm -2");
  }
}

template <class T, class Hash, class Step>
std::vector<T> closure(const T& seed, std::size_t generators, std::size_t cap, Step step) {
  std::unordered_set<T, Hash> seen{seed};
  std::deque<T> frontier{seed};
  while (!frontier.empty()) {
    T current = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < generators; ++i) {
      T next = step(i, current);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw CapExceeded("orbit exceeds cap of " + std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<T> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t seed = w.coords.size();
    for (const auto& v : w.coords) {
      seed ^= std::hash<long>{}(v.get_si()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};

Weight simple_reflect(const Weight& w, std::size_t i, const CartanMatrix& cartan) {
  Weight out = w;
  const Integer mi = w.coords[i];
  if (mi == 0) return out;
  for (std::size_t j = 0; j < out.coords.size(); ++j) out.coords[j] -= mi * cartan[i][j];
  return out;
}

void require_dominant(const Weight& w) {
  for (const auto& v : w.coords) {
    if (v < 0) throw PreconditionError("highest weight must be dominant");
  }
}

}  // namespace

std::string DynkinLabel::to_string() const {
  switch (type) {
    case DynkinType::A:
      return "A_" + std::to_string(rank);
    case DynkinType::D:
      return "D_" + std::to_string(rank);
    case DynkinType::E:
      return "E_" + std::to_string(rank);
    case DynkinType::Infinite:
      return "INFINITE";
  }
  return "INFINITE";
}

std::vector<std::vector<Integer>> RootSystemData::gram() const {
  const std::size_t n = simple_roots.size();
  std::vector<std::vector<Integer>> g(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = pairing(simple_roots[i], simple_roots[j]);
  return g;
}

CartanMatrix RootSystemData::cartan() const {
  const auto g = gram();
  CartanMatrix a(g.size(), std::vector<int>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) a[i][j] = static_cast<int>(-g[i][j].get_si());
  return a;
}

RootSystemData simple_roots(const LatticeContext& ctx) {
  const int r = ctx.r();
  const int c = ctx.c();
  std::vector<DivisorClass> roots;
  for (int i = 1; i < r; ++i) {
    roots.push_back(DivisorClass::exceptional(ctx, i) - DivisorClass::exceptional(ctx, i + 1));
  }
  DivisorClass branch = DivisorClass::hyperplane(ctx, 1);
  for (int j = 1; j <= c; ++j) branch -= DivisorClass::exceptional(ctx, j);
  roots.push_back(branch);
  // H_{i+1} - H_i keeps every edge of the tree at pairing +1.
  for (int i = 1; i < ctx.hyperplanes(); ++i) {
    roots.push_back(DivisorClass::hyperplane(ctx, i + 1) - DivisorClass::hyperplane(ctx, i));
  }
  return RootSystemData{ctx, std::move(roots), dynkin_label(ctx.a(), ctx.b(), ctx.c())};
}

bool is_finite_type(int a, int b, int c) {
  // 1/a + 1/b + 1/c > 1  <=>  bc + ac + ab > abc for positive a, b, c
  const Integer A(a), B(b), C(c);
  return B * C + A * C + A * B > A * B * C;
}

DynkinLabel dynkin_label(int a, int b, int c) {
  if (!is_finite_type(a, b, c)) return {DynkinType::Infinite, 0};
  const int nodes = a + b + c - 2;
  std::array<int, 3> legs{a - 1, b - 1, c - 1};
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 0) return {DynkinType::A, nodes};
  if (legs[0] == 1 && legs[1] == 1) return {DynkinType::D, nodes};
  // Remaining finite shapes are (1,2,2), (1,2,3), (1,2,4).
  return {DynkinType::E, nodes};
}

DivisorClass reflect(const DivisorClass& alpha, const DivisorClass& d) {
  require_root(alpha);
  return d + pairing(d, alpha) * alpha;
}

CurveClass reflect_curve(const DivisorClass& alpha, const CurveClass& g) {
  require_root(alpha);
  return g + intersect(alpha, g) * dual_curve(alpha);
}

std::vector<DivisorClass> weyl_orbit(const DivisorClass& d, const RootSystemData& rs, std::size_t cap) {
  require_finite(rs.ctx);
  if (!(d.ctx() == rs.ctx)) throw ContextMismatch();
  return closure<DivisorClass, DivisorClassHash>(d, rs.size(), cap, [&](std::size_t i, const DivisorClass& x) {
    const auto& alpha = rs.simple_roots[i];
    return x + pairing(x, alpha) * alpha;
  });
}

std::vector<CurveClass> weyl_orbit(const CurveClass& g, const RootSystemData& rs, std::size_t cap) {
  require_finite(rs.ctx);
  if (!(g.ctx() == rs.ctx)) throw ContextMismatch();
  std::vector<CurveClass> duals;
  for (const auto& alpha : rs.simple_roots) duals.push_back(dual_curve(alpha));
  return closure<CurveClass, CurveClassHash>(g, rs.size(), cap, [&](std::size_t i, const CurveClass& x) {
    return x + intersect(rs.simple_roots[i], x) * duals[i];
  });
}

Weight weight_coords(const DivisorClass& d, const RootSystemData& rs) {
  Weight w;
  w.coords.reserve(rs.size());
  for (const auto& alpha : rs.simple_roots) w.coords.push_back(pairing(d, alpha));
  return w;
}

KPerpProjection project_to_kperp(const DivisorClass& d, const RootSystemData& rs) {
  const DivisorClass k = canonical_class(d.ctx());
  const Integer kk = pairing(k, k);
  if (kk == 0) throw PreconditionError("(K,K) = 0: projection to K-perp undefined");
  const Rational t(pairing(d, k), kk);
  KPerpProjection out;
  for (std::size_t i = 0; i < d.h().size(); ++i) out.h.push_back(Rational(d.h()[i]) - t * Rational(k.h()[i]));
  for (std::size_t j = 0; j < d.m().size(); ++j) out.m.push_back(Rational(d.m()[j]) - t * Rational(k.m()[j]));
  for (auto& q : out.h) q.canonicalize();
  for (auto& q : out.m) q.canonicalize();
  out.weight = weight_coords(d, rs);
  return out;
}

std::vector<Weight> positive_roots(const CartanMatrix& cartan) {
  const std::size_t n = cartan.size();
  // Roots in simple-root coordinates: the Weyl orbits of the simple roots.
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (roots.insert(e).second) frontier.push_back(e);
  }
  while (!frontier.empty()) {
    auto beta = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pair = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) pair += beta[j] * cartan[j][i];
      if (pair == 0) continue;
      auto next = beta;
      next[i] -= pair;
      if (roots.insert(next).second) {
        if (roots.size() > kDefaultOrbitCap) throw CapExceeded("root system is not finite");
        frontier.push_back(next);
      }
    }
  }
  std::vector<Weight> out;
  for (const auto& beta : roots) {
    if (std::any_of(beta.begin(), beta.end(), [](int v) { return v < 0; })) continue;
    Weight w;
    w.coords.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w.coords[j] += beta[i] * cartan[i][j];
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Weight> weyl_orbit(const Weight& w, const CartanMatrix& cartan, std::size_t cap) {
  return closure<Weight, WeightHash>(w, cartan.size(), cap,
                                     [&](std::size_t i, const Weight& x) { return simple_reflect(x, i, cartan); });
}

std::vector<Weight> weights_of_irrep(const Weight& lambda, const CartanMatrix& cartan, std::size_t cap) {
  require_dominant(lambda);
  if (lambda.coords.size() != cartan.size()) throw PreconditionError("weight length does not match rank");
  const std::size_t n = cartan.size();

  // Positive roots with their simple-root coordinates: <mu, beta^vee> = sum c_i mu_i.
  struct Root {
    Weight weight;
    std::vector<Integer> coroot;
  };
  std::vector<Root> roots;
  {
    const auto pos = positive_roots(cartan);
    RationalMatrix a(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = cartan[j][i];
    const RationalMatrix a_inv = inverse(a);
    for (const auto& w : pos) {
      RationalVector wv(w.coords.begin(), w.coords.end());
      RationalVector c = multiply(a_inv, wv);
      Root root{w, {}};
      for (auto& q : c) root.coroot.push_back(q.get_num());
      roots.push_back(std::move(root));
    }
  }

  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::deque<Weight> frontier{lambda};
  auto visit = [&](Weight w) {
    if (seen.insert(w).second) {
      if (seen.size() > cap) throw CapExceeded("weight system exceeds cap of " + std::to_string(cap));
      frontier.push_back(std::move(w));
    }
  };
  while (!frontier.empty()) {
    Weight mu = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& root : roots) {
      Integer t = 0;
      for (std::size_t i = 0; i < n; ++i) t += root.coroot[i] * mu.coords[i];
      if (t == 0) continue;
      const int sign = t > 0 ? -1 : 1;
      const long steps = Integer(abs(t)).get_si();
      Weight next = mu;
      for (long s = 0; s < steps; ++s) {
        for (std::size_t j = 0; j < n; ++j) next.coords[j] += sign * root.weight.coords[j];
        visit(next);
      }
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> weights_of_irrep(const Weight& lambda, const RootSystemData& rs, std::size_t cap) {
  require_finite(rs.ctx);
  return weights_of_irrep(lambda, rs.cartan(), cap);
}

Weight exceptional_weight(const RootSystemData& rs) {
  return weight_coords(DivisorClass::exceptional(rs.ctx, rs.ctx.r()), rs);
}

bool is_minuscule(const LatticeContext& ctx) {
  require_finite(ctx);
  const auto rs = simple_roots(ctx);
  const Weight top = exceptional_weight(rs);
  const auto cartan = rs.cartan();
  return weights_of_irrep(top, cartan).size() == weyl_orbit(top, cartan).size();
}

std::vector<DivisorClass> degree_one_divisors(const LatticeContext& ctx) {
  require_finite(ctx);
  const DivisorClass k = canonical_class(ctx);
  if (pairing(k, k) == 0) throw PreconditionError("(K,K) = 0: degree-one classes are not separated by weights");
  const auto rs = simple_roots(ctx);
  const auto g = rs.gram();
  const std::size_t n = rs.size();
  RationalMatrix gram(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = g[i][j];
  const RationalMatrix gram_inv = inverse(gram);

  const DivisorClass er = DivisorClass::exceptional(ctx, ctx.r());
  const Weight top = weight_coords(er, rs);
  std::vector<DivisorClass> out;
  for (const auto& mu : weights_of_irrep(top, rs)) {
    // D = E_r + sum x_i alpha_i has degree 1 (roots lie in K-perp) and
    // weight top + G x, so x = G^{-1} (mu - top).
    RationalVector diff(n);
    for (std::size_t j = 0; j < n; ++j) diff[j] = Rational(mu.coords[j] - top.coords[j]);
    const RationalVector x = multiply(gram_inv, diff);
    bool integral = std::all_of(x.begin(), x.end(), [](const Rational& q) { return q.get_den() == 1; });
    if (!integral) continue;
    DivisorClass d = er;
    for (std::size_t i = 0; i < n; ++i) d += x[i].get_num() * rs.simple_roots[i];
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxforge
