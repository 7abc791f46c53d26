#include "coxforge/blowup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "coxforge/errors.hpp"

namespace coxforge {

namespace {

void require_blowup_class(const DivisorClass& d, const BlowupContext& bc) {
  if (!(d.ctx() == bc.lattice())) {
    throw ContextMismatch("class context " + d.ctx().to_string() + " does not match Bl_" + std::to_string(bc.r()) +
                          " P^" + std::to_string(bc.n()));
  }
}

// Lexicographic k-subsets of {1..r}.
void for_each_subset(int r, int size, const std::function<void(const std::vector<int>&)>& visit) {
  if (size < 0 || size > r) return;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    visit(idx);
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == r - size + pos + 1) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

BlowupContext::BlowupContext(int n, int r) : n_(n), r_(r) {
  if (n < 2) throw PreconditionError("blow-up context needs n >= 2");
  if (r < n + 3) throw PreconditionError("blow-up context needs r >= n + 3");
}

DivisorClass minimal_divisor(const BlowupContext& bc, int k, const std::vector<int>& support) {
  if (k < 1 || 2 * k > bc.n() + 2) throw PreconditionError("minimal divisor needs 1 <= k <= 1 + n/2");
  if (static_cast<int>(support.size()) != bc.n() + 2 - 2 * k) {
    throw PreconditionError("minimal divisor needs |I| = n + 2 - 2k");
  }
  std::vector<Integer> m(bc.r(), Integer(k - 1));
  for (int i : support) {
    if (i < 1 || i > bc.r()) throw PreconditionError("point index out of range");
    if (m[i - 1] == k) throw PreconditionError("repeated point index");
    m[i - 1] = k;
  }
  return DivisorClass::from_hm(bc.lattice(), Integer(k), std::move(m));
}

std::vector<DivisorClass> enumerate_minimal(const BlowupContext& bc) {
  std::vector<DivisorClass> out;
  for (int k = 1; 2 * k <= bc.n() + 2; ++k) {
    for_each_subset(bc.r(), bc.n() + 2 - 2 * k,
                    [&](const std::vector<int>& support) { out.push_back(minimal_divisor(bc, k, support)); });
  }
  return out;
}

std::optional<MinimalShape> minimal_shape(const DivisorClass& d, const BlowupContext& bc) {
  if (!(d.ctx() == bc.lattice())) return std::nullopt;
  const Integer& kz = d.h()[0];
  if (kz < 1 || 2 * kz > bc.n() + 2) return std::nullopt;
  const int k = static_cast<int>(kz.get_si());
  MinimalShape shape{k, {}};
  for (int i = 1; i <= bc.r(); ++i) {
    if (d.m(i) == k) {
      shape.support.push_back(i);
    } else if (d.m(i) != k - 1) {
      return std::nullopt;
    }
  }
  if (static_cast<int>(shape.support.size()) != bc.n() + 2 - 2 * k) return std::nullopt;
  return shape;
}

DivisorClass project_class(const DivisorClass& d, const BlowupContext& bc) {
  require_blowup_class(d, bc);
  if (bc.n() < 3) throw PreconditionError("projection from p_1 needs n >= 3");
  const Integer& deg = d.h()[0];
  const Integer& m1 = d.m()[0];
  std::vector<Integer> m;
  for (int i = 2; i <= bc.r(); ++i) m.push_back(d.m(i) + m1 - deg);
  return DivisorClass::from_hm(LatticeContext::blowup(bc.n() - 1, bc.r() - 1), m1, std::move(m));
}

std::string to_string(ProjectionCase c) {
  switch (c) {
    case ProjectionCase::Case0:
      return "CASE0";
    case ProjectionCase::Case1:
      return "CASE1";
    case ProjectionCase::Special:
      return "SPECIAL";
  }
  return "CASE0";
}

ProjectionResult classify_minimal_projection(const DivisorClass& e, const BlowupContext& bc) {
  const auto shape = minimal_shape(e, bc);
  if (!shape) throw PreconditionError(e.to_string() + " is not a minimal divisor");
  const LatticeContext& ctx = e.ctx();
  const Integer test = intersect(e, CurveClass::line(ctx) - CurveClass::exceptional_line(ctx, 1));
  DivisorClass target = project_class(e, bc);
  const int k = shape->k;
  if (test == 0) return {std::move(target), ProjectionCase::Case0, 0, std::nullopt};
  if (test != 1) throw Error("minimal divisor with E.(l - e_1) = " + test.get_str());
  if (k == 1) return {std::move(target), ProjectionCase::Special, 0, std::nullopt};
  std::vector<Integer> m = target.m();
  m.push_back(Integer(k - 1));
  DivisorClass lifted = DivisorClass::from_hm(LatticeContext::blowup(bc.n() - 1, bc.r()), target.h()[0], std::move(m));
  return {std::move(target), ProjectionCase::Case1, k - 1, std::move(lifted)};
}

Integer mult_lower_bound(const DivisorClass& d, const BlowupContext& bc) {
  require_blowup_class(d, bc);
  Integer excess = std::accumulate(d.m().begin(), d.m().end(), Integer(0)) - Integer(bc.n()) * d.h()[0];
  Integer bound = ceil_div(excess, Integer(bc.alpha()));
  return bound > 0 ? bound : Integer(0);
}

std::vector<DivisorClass> effective_decompose(const DivisorClass& d, const BlowupContext& bc) {
  require_blowup_class(d, bc);
  const Integer& deg = d.h()[0];
  if (deg < 0) throw PreconditionError("table decomposition needs d >= 0");
  Integer total = 0;
  for (int i = 1; i <= bc.r(); ++i) {
    if (d.m(i) < 0) throw PreconditionError("table decomposition needs m_" + std::to_string(i) + " >= 0");
    if (d.m(i) > deg) throw PreconditionError("table decomposition needs d >= m_" + std::to_string(i));
    total += d.m(i);
  }
  if (total > Integer(bc.n()) * deg) throw PreconditionError("table decomposition needs sum m_i <= n d");

  const long columns = deg.get_si();
  const int rows = bc.n();
  std::vector<std::vector<int>> table(rows, std::vector<int>(columns, 0));
  long cell = 0;
  for (int i = 1; i <= bc.r(); ++i) {
    for (long copy = 0; copy < d.m(i).get_si(); ++copy, ++cell) table[cell / columns][cell % columns] = i;
  }
  const LatticeContext ctx = bc.lattice();
  std::vector<DivisorClass> parts;
  for (long col = 0; col < columns; ++col) {
    DivisorClass part = DivisorClass::hyperplane(ctx);
    for (int row = 0; row < rows; ++row) {
      if (table[row][col] != 0) part -= DivisorClass::exceptional(ctx, table[row][col]);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

EffectiveCone::EffectiveCone(const LatticeContext& ctx, std::size_t cap) : ctx_(ctx) {
  if (!is_finite_type(ctx.a(), ctx.b(), ctx.c())) {
    throw PreconditionError("effective cone faces are only known for finite type, got " + ctx.to_string());
  }
  const auto rs = simple_roots(ctx);
  CurveClass sum_lines = CurveClass::line(ctx, 1);
  for (int i = 2; i <= ctx.hyperplanes(); ++i) sum_lines += CurveClass::line(ctx, i);
  const CurveClass first = sum_lines - CurveClass::exceptional_line(ctx, 1);
  const CurveClass second = CurveClass::line(ctx, ctx.hyperplanes());
  faces_ = weyl_orbit(first, rs, cap);
  for (auto& g : weyl_orbit(second, rs, cap)) faces_.push_back(std::move(g));
}

MembershipResult EffectiveCone::test(const DivisorClass& d) const {
  if (!(d.ctx() == ctx_)) throw ContextMismatch();
  for (const auto& g : faces_) {
    if (intersect(d, g) < 0) return {false, g};
  }
  return {true, std::nullopt};
}

MembershipResult eff_membership(const DivisorClass& d, std::size_t cap) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, std::size_t>, std::shared_ptr<const EffectiveCone>> cache;
  const auto& ctx = d.ctx();
  std::shared_ptr<const EffectiveCone> cone;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(ctx.a(), ctx.b(), ctx.c(), cap);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_shared<const EffectiveCone>(ctx, cap)).first;
    cone = it->second;
  }
  return cone->test(d);
}

std::optional<std::vector<DivisorClass>> decompose_degree1(const DivisorClass& d, std::size_t budget) {
  const auto& ctx = d.ctx();
  if (!is_finite_type(ctx.a(), ctx.b(), ctx.c())) throw PreconditionError("decompose_degree1 needs finite type");
  const Rational deg = degree(d);
  if (deg.get_den() != 1 || deg < 0) {
    throw PreconditionError("decompose_degree1 needs a nonnegative integral degree, got " + deg.get_str());
  }
  const long slots = deg.get_num().get_si();
  if (slots == 0) {
    if (d == DivisorClass::zero(ctx)) return std::vector<DivisorClass>{};
    return std::nullopt;
  }
  if (!eff_membership(d).member) return std::nullopt;

  auto candidates = degree_one_divisors(ctx);
  auto hsum = [](const DivisorClass& x) { return std::accumulate(x.h().begin(), x.h().end(), Integer(0)); };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const DivisorClass& x, const DivisorClass& y) { return hsum(x) > hsum(y); });
  std::unordered_map<DivisorClass, std::size_t, DivisorClassHash> index;
  for (std::size_t i = 0; i < candidates.size(); ++i) index.emplace(candidates[i], i);

  // Cheap necessary conditions on an effective residual: the nef classes
  // l_i and l_1 + ... + l_{a-1} - e_j pair nonnegatively with it.
  auto plausible = [&](const DivisorClass& residual) {
    Integer total_h = 0;
    for (const auto& v : residual.h()) {
      if (v < 0) return false;
      total_h += v;
    }
    for (const auto& mj : residual.m()) {
      if (total_h - mj < 0) return false;
    }
    return true;
  };

  std::size_t nodes = 0;
  std::vector<DivisorClass> chosen;
  auto search = [&](auto&& self, const DivisorClass& residual, long remaining, std::size_t start) -> bool {
    if (++nodes > budget) throw CapExceeded("decompose_degree1 search budget of " + std::to_string(budget) + " exhausted");
    if (remaining == 1) {
      auto it = index.find(residual);
      if (it == index.end() || it->second < start) return false;
      chosen.push_back(residual);
      return true;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      DivisorClass next = residual - candidates[i];
      if (!plausible(next)) continue;
      chosen.push_back(candidates[i]);
      if (self(self, next, remaining - 1, i)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, d, slots, 0)) return chosen;
  return std::nullopt;
}

}  // namespace coxforge
