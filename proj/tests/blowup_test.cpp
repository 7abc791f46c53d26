#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "coxforge/blowup.hpp"
#include "coxforge/errors.hpp"
#include "coxforge/roots.hpp"

using namespace coxforge;

namespace {

DivisorClass cls(int n, int r, int d, std::vector<int> m) {
  return DivisorClass::from_hm(LatticeContext::blowup(n, r), Integer(d), {m.begin(), m.end()});
}

// All multisets of `slots` degree-one classes summing to d.
std::set<std::vector<DivisorClass>> brute_force_decompositions(const DivisorClass& d, int slots) {
  const auto gens = degree_one_divisors(d.ctx());
  std::set<std::vector<DivisorClass>> out;
  std::vector<DivisorClass> pick;
  std::function<void(std::size_t, DivisorClass)> rec = [&](std::size_t start, DivisorClass acc) {
    if (static_cast<int>(pick.size()) == slots) {
      if (acc == d) {
        auto sorted = pick;
        std::sort(sorted.begin(), sorted.end());
        out.insert(sorted);
      }
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      pick.push_back(gens[i]);
      rec(i, acc + gens[i]);
      pick.pop_back();
    }
  };
  rec(0, DivisorClass::zero(d.ctx()));
  return out;
}

}  // namespace

TEST(Minimal, CountsOrderAndDegree) {
  const auto n2 = enumerate_minimal(BlowupContext(2, 5));
  ASSERT_EQ(n2.size(), 11u);
  EXPECT_EQ(n2.front(), cls(2, 5, 1, {1, 1, 0, 0, 0}));
  EXPECT_EQ(n2.back(), cls(2, 5, 2, {1, 1, 1, 1, 1}));
  EXPECT_EQ(enumerate_minimal(BlowupContext(4, 7)).size(), 57u);
  for (int n = 2; n <= 5; ++n) {
    for (int r = n + 3; r <= n + 5; ++r) {
      const BlowupContext bc(n, r);
      const auto ds = enumerate_minimal(bc);
      Integer expected = 0;
      for (int k = 1; 2 * k <= n + 2; ++k) expected += binomial(r, n + 2 - 2 * k);
      EXPECT_EQ(Integer(static_cast<long>(ds.size())), expected);
      if (r == n + 3) EXPECT_EQ(static_cast<long>(ds.size()) + r, 1L << (n + 2));
      for (const auto& e : ds) {
        const int k = static_cast<int>(e.h()[0].get_si());
        EXPECT_EQ(degree(e), 1 - (k - 1) * (r - n - 3));
        ASSERT_TRUE(minimal_shape(e, bc).has_value());
      }
    }
  }
  EXPECT_THROW(BlowupContext(3, 5), PreconditionError);
}

TEST(Projection, Examples) {
  const BlowupContext bc(3, 6);
  EXPECT_EQ(project_class(cls(3, 6, 1, {1, 1, 0, 0, 0, 0}), bc), cls(2, 5, 1, {1, 0, 0, 0, 0}));
  const auto special = project_class(cls(3, 6, 1, {0, 1, 1, 1, 0, 0}), bc);
  EXPECT_EQ(special, cls(2, 5, 0, {0, 0, 0, -1, -1}));
  EXPECT_EQ(special.to_string(), "E4 + E5");
  EXPECT_THROW(project_class(cls(2, 5, 1, {1, 1, 0, 0, 0}), BlowupContext(2, 5)), PreconditionError);
}

TEST(Projection, LinearAndInjectiveAtFixedHDegree) {
  std::mt19937_64 rng(12);
  const BlowupContext bc(4, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> m1(8);
    std::vector<int> m2(8);
    for (auto& x : m1) x = std::uniform_int_distribution<int>(-2, 5)(rng);
    for (auto& x : m2) x = std::uniform_int_distribution<int>(-2, 5)(rng);
    const int d = std::uniform_int_distribution<int>(0, 6)(rng);
    const auto a = cls(4, 8, d, m1);
    const auto b = cls(4, 8, std::uniform_int_distribution<int>(0, 6)(rng), m2);
    EXPECT_EQ(project_class(a + b, bc), project_class(a, bc) + project_class(b, bc));
    // recover a from its H-degree and its projection
    const auto t = project_class(a, bc);
    std::vector<int> back(8);
    back[0] = static_cast<int>(t.h()[0].get_si());
    for (int i = 2; i <= 8; ++i) back[i - 1] = static_cast<int>(t.m(i - 1).get_si()) - back[0] + d;
    EXPECT_EQ(cls(4, 8, d, back), a);
  }
}

TEST(Classify, ThreeCases) {
  const BlowupContext bc3(3, 6);
  const auto case0 = classify_minimal_projection(cls(3, 6, 2, {2, 1, 1, 1, 1, 1}), bc3);
  EXPECT_EQ(case0.tag, ProjectionCase::Case0);
  EXPECT_EQ(case0.target, cls(2, 5, 2, {1, 1, 1, 1, 1}));
  EXPECT_EQ(case0.e_q_coefficient, 0);

  const auto special = classify_minimal_projection(cls(3, 6, 1, {0, 1, 1, 1, 0, 0}), bc3);
  EXPECT_EQ(special.tag, ProjectionCase::Special);
  EXPECT_EQ(special.target, cls(2, 5, 0, {0, 0, 0, -1, -1}));

  const auto case1 = classify_minimal_projection(cls(4, 7, 2, {1, 2, 2, 1, 1, 1, 1}), BlowupContext(4, 7));
  EXPECT_EQ(case1.tag, ProjectionCase::Case1);
  EXPECT_EQ(case1.e_q_coefficient, 1);
  EXPECT_EQ(case1.target, cls(3, 6, 1, {1, 1, 0, 0, 0, 0}));
  ASSERT_TRUE(case1.lifted.has_value());
  EXPECT_EQ(*case1.lifted, cls(3, 7, 1, {1, 1, 0, 0, 0, 0, 1}));

  EXPECT_THROW(classify_minimal_projection(cls(3, 6, 2, {2, 2, 1, 1, 1, 1}), bc3), PreconditionError);
}

TEST(Classify, TagsAgreeWithCurvePairing) {
  for (int n = 3; n <= 5; ++n) {
    const BlowupContext bc(n, n + 4);
    const LatticeContext ctx = bc.lattice();
    std::vector<Integer> e(ctx.r(), Integer(0));
    e[0] = -1;
    const CurveClass line_through_p1(ctx, {1}, e);
    for (const auto& m : enumerate_minimal(bc)) {
      const auto res = classify_minimal_projection(m, bc);
      const Integer dot = intersect(m, line_through_p1);
      EXPECT_EQ(res.tag == ProjectionCase::Case0, dot == 0) << m.to_string();
      if (res.tag == ProjectionCase::Special) EXPECT_EQ(m.h()[0], 1);
      if (res.tag != ProjectionCase::Special) {
        const BlowupContext target_bc(n - 1, res.lifted ? res.lifted->ctx().r() : res.target.ctx().r());
        const auto& minimal = res.lifted ? *res.lifted : res.target;
        EXPECT_TRUE(minimal_shape(minimal, target_bc).has_value()) << m.to_string();
      }
    }
  }
}

TEST(MultBound, Examples) {
  EXPECT_EQ(mult_lower_bound(cls(3, 7, 1, {1, 1, 0, 0, 0, 0, 0}), BlowupContext(3, 7)), 0);
  EXPECT_EQ(mult_lower_bound(cls(2, 5, 2, {1, 1, 1, 1, 1}), BlowupContext(2, 5)), 1);
  EXPECT_EQ(mult_lower_bound(cls(2, 6, 3, {1, 1, 1, 1, 1, 1}), BlowupContext(2, 6)), 0);
  // (9 - 4) / 2 rounds up to 3
  EXPECT_EQ(mult_lower_bound(cls(2, 6, 2, {2, 2, 2, 1, 1, 1}), BlowupContext(2, 6)), 3);
}

TEST(EffectiveDecompose, WorkedExample) {
  const BlowupContext bc(3, 6);
  const auto parts = effective_decompose(cls(3, 6, 5, {3, 3, 2, 5, 1, 0}), bc);
  const std::vector<DivisorClass> expected = {
      cls(3, 6, 1, {1, 1, 0, 1, 0, 0}), cls(3, 6, 1, {1, 0, 1, 1, 0, 0}), cls(3, 6, 1, {1, 0, 1, 1, 0, 0}),
      cls(3, 6, 1, {0, 1, 0, 1, 1, 0}), cls(3, 6, 1, {0, 1, 0, 1, 0, 0})};
  EXPECT_EQ(parts, expected);
}

TEST(EffectiveDecompose, ResumsWithDistinctColumns) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int r = std::uniform_int_distribution<int>(n + 3, n + 5)(rng);
    const int d = std::uniform_int_distribution<int>(0, 7)(rng);
    std::vector<int> m(r);
    int budget = n * d;
    for (auto& x : m) {
      x = std::min(budget, std::uniform_int_distribution<int>(0, d)(rng));
      budget -= x;
    }
    const auto dc = cls(n, r, d, m);
    const auto parts = effective_decompose(dc, BlowupContext(n, r));
    ASSERT_EQ(static_cast<int>(parts.size()), d);
    DivisorClass sum = DivisorClass::zero(dc.ctx());
    for (const auto& p : parts) {
      EXPECT_EQ(p.h()[0], 1);
      int count = 0;
      for (const auto& x : p.m()) {
        EXPECT_TRUE(x == 0 || x == 1);
        count += static_cast<int>(x.get_si());
      }
      EXPECT_LE(count, n);
      sum += p;
    }
    EXPECT_EQ(sum, dc);
  }
  const auto h3 = effective_decompose(cls(2, 5, 3, {0, 0, 0, 0, 0}), BlowupContext(2, 5));
  EXPECT_EQ(h3, std::vector<DivisorClass>(3, cls(2, 5, 1, {0, 0, 0, 0, 0})));
}

TEST(EffectiveDecompose, NamesTheFailedInequality) {
  const BlowupContext bc(2, 5);
  auto message = [&](const DivisorClass& d) {
    try {
      effective_decompose(d, bc);
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(cls(2, 5, 2, {1, 1, 1, 1, 1})).find("sum m_i <= n d"), std::string::npos);
  EXPECT_NE(message(cls(2, 5, 2, {3, 0, 0, 0, 0})).find("d >= m_1"), std::string::npos);
  EXPECT_NE(message(cls(2, 5, 2, {0, -1, 0, 0, 0})).find("m_2 >= 0"), std::string::npos);
  EXPECT_NE(message(cls(2, 5, -1, {0, 0, 0, 0, 0})).find("d >= 0"), std::string::npos);
}

TEST(Membership, MinimalDivisorsAndTheirDrops) {
  for (int n = 2; n <= 4; ++n) {
    const BlowupContext bc(n, n + 3);
    const LatticeContext ctx = bc.lattice();
    for (const auto& e : enumerate_minimal(bc)) {
      EXPECT_TRUE(eff_membership(e).member) << e.to_string();
      for (int i = 1; i <= ctx.r(); ++i) {
        const auto res = eff_membership(e - DivisorClass::exceptional(ctx, i));
        EXPECT_FALSE(res.member);
        ASSERT_TRUE(res.certificate.has_value());
        EXPECT_LT(intersect(e - DivisorClass::exceptional(ctx, i), *res.certificate), 0);
      }
    }
  }
}

TEST(Membership, AnticanonicalAndReflectionInvariance) {
  std::mt19937_64 rng(14);
  for (const auto& ctx : {LatticeContext(2, 2, 3), LatticeContext(2, 3, 3), LatticeContext(3, 1, 4),
                          LatticeContext(3, 2, 3), LatticeContext(2, 2, 4)}) {
    EXPECT_TRUE(eff_membership(anticanonical_class(ctx)).member) << ctx.to_string();
    const auto rs = simple_roots(ctx);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Integer> h(ctx.hyperplanes());
      std::vector<Integer> m(ctx.r());
      for (auto& x : h) x = std::uniform_int_distribution<int>(0, 4)(rng);
      for (auto& x : m) x = std::uniform_int_distribution<int>(-1, 3)(rng);
      const DivisorClass d(ctx, h, m);
      const bool member = eff_membership(d).member;
      for (const auto& alpha : rs.simple_roots) EXPECT_EQ(eff_membership(reflect(alpha, d)).member, member);
    }
  }
  EXPECT_THROW(eff_membership(DivisorClass::hyperplane(LatticeContext(3, 3, 3))), PreconditionError);
}

TEST(DecomposeDegreeOne, MatchesBruteForce) {
  const LatticeContext ctx(2, 2, 3);
  const auto anti = anticanonical_class(ctx);
  const auto oracle = brute_force_decompositions(anti, 4);
  ASSERT_FALSE(oracle.empty());
  auto got = decompose_degree1(anti);
  ASSERT_TRUE(got.has_value());
  std::sort(got->begin(), got->end());
  EXPECT_TRUE(oracle.count(*got));

  std::mt19937_64 rng(15);
  int compared = 0;
  while (compared < 60) {
    const int d = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<int> m(5);
    for (auto& x : m) x = std::uniform_int_distribution<int>(-1, 2)(rng);
    const auto dc = DivisorClass::from_hm(ctx, Integer(d), {m.begin(), m.end()});
    const Rational deg = degree(dc);
    if (deg < 0 || deg > 3 || deg.get_den() != 1) continue;
    ++compared;
    const auto found = decompose_degree1(dc);
    const auto all = brute_force_decompositions(dc, static_cast<int>(deg.get_num().get_si()));
    EXPECT_EQ(found.has_value(), !all.empty()) << dc.to_string();
    if (found) {
      auto sorted = *found;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_TRUE(all.count(sorted)) << dc.to_string();
    }
  }
}

TEST(DecomposeDegreeOne, SingletonsNoneAndBudget) {
  const LatticeContext ctx(2, 3, 3);
  for (const auto& e : degree_one_divisors(ctx)) {
    const auto got = decompose_degree1(e);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, std::vector<DivisorClass>{e});
  }
  const LatticeContext d5(2, 2, 3);
  const auto outside = DivisorClass::from_hm(d5, Integer(1), {1, 1, 1, 0, 0});
  EXPECT_FALSE(eff_membership(outside).member);
  EXPECT_FALSE(decompose_degree1(outside).has_value());
  EXPECT_THROW(decompose_degree1(DivisorClass::from_hm(d5, Integer(1), {1, 0, 0, 0, 0}) +
                                     DivisorClass::from_hm(d5, Integer(1), {0, 0, 0, 0, 0}) +
                                     anticanonical_class(d5) + anticanonical_class(d5),
                                 1),
               CapExceeded);
}
