#include <gtest/gtest.h>

#include <random>

#include "coxforge/errors.hpp"
#include "coxforge/lattice.hpp"

using namespace coxforge;

namespace {

DivisorClass random_class(const LatticeContext& ctx, std::mt19937_64& rng, int bound = 6) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<Integer> h(ctx.hyperplanes());
  std::vector<Integer> m(ctx.r());
  for (auto& x : h) x = coef(rng);
  for (auto& x : m) x = coef(rng);
  return DivisorClass(ctx, h, m);
}

std::vector<LatticeContext> sample_contexts() {
  return {LatticeContext(2, 2, 3), LatticeContext(2, 3, 3), LatticeContext(3, 2, 3), LatticeContext(3, 1, 4),
          LatticeContext(2, 3, 5), LatticeContext(4, 2, 3)};
}

}  // namespace

TEST(Context, ValidatesAndDerivesShape) {
  EXPECT_THROW(LatticeContext(1, 2, 3), PreconditionError);
  EXPECT_THROW(LatticeContext(2, 0, 3), PreconditionError);
  EXPECT_THROW(LatticeContext(2, 2, 2), PreconditionError);
  const LatticeContext ctx(3, 2, 3);
  EXPECT_EQ(ctx.r(), 5);
  EXPECT_EQ(ctx.rank(), 7);
  EXPECT_EQ(ctx.kappa(), 3);
  EXPECT_EQ(LatticeContext::blowup(3, 6), LatticeContext(2, 2, 4));
  EXPECT_EQ(LatticeContext::blowup(2, 5), LatticeContext(2, 2, 3));
}

TEST(Pairing, BasisValues) {
  const LatticeContext ctx(3, 2, 3);
  const auto h1 = DivisorClass::hyperplane(ctx, 1);
  const auto h2 = DivisorClass::hyperplane(ctx, 2);
  const auto e1 = DivisorClass::exceptional(ctx, 1);
  const auto e2 = DivisorClass::exceptional(ctx, 2);
  EXPECT_EQ(pairing(h1, h1), 1);  // c - 2
  EXPECT_EQ(pairing(h1, h2), 2);  // c - 1
  EXPECT_EQ(pairing(h1, e1), 0);
  EXPECT_EQ(pairing(e1, e1), -1);
  EXPECT_EQ(pairing(e1, e2), 0);
}

TEST(Pairing, SymmetricAndBilinear) {
  std::mt19937_64 rng(1);
  for (const auto& ctx : sample_contexts()) {
    for (int trial = 0; trial < 120; ++trial) {
      const auto x = random_class(ctx, rng);
      const auto y = random_class(ctx, rng);
      const auto z = random_class(ctx, rng);
      const Integer k = std::uniform_int_distribution<int>(-5, 5)(rng);
      EXPECT_EQ(pairing(x, y), pairing(y, x));
      EXPECT_EQ(pairing(x + y, z), pairing(x, z) + pairing(y, z));
      EXPECT_EQ(pairing(k * x, z), k * pairing(x, z));
    }
  }
}

TEST(Intersect, BasisMatrixIsSignedIdentity) {
  const LatticeContext ctx(3, 2, 4);
  for (int i = 1; i <= ctx.hyperplanes(); ++i) {
    for (int j = 1; j <= ctx.hyperplanes(); ++j) {
      EXPECT_EQ(intersect(DivisorClass::hyperplane(ctx, i), CurveClass::line(ctx, j)), i == j ? 1 : 0);
    }
    for (int j = 1; j <= ctx.r(); ++j) {
      EXPECT_EQ(intersect(DivisorClass::hyperplane(ctx, i), CurveClass::exceptional_line(ctx, j)), 0);
      EXPECT_EQ(intersect(DivisorClass::exceptional(ctx, j), CurveClass::line(ctx, i)), 0);
    }
  }
  for (int i = 1; i <= ctx.r(); ++i) {
    for (int j = 1; j <= ctx.r(); ++j) {
      EXPECT_EQ(intersect(DivisorClass::exceptional(ctx, i), CurveClass::exceptional_line(ctx, j)), i == j ? -1 : 0);
    }
  }
}

TEST(Intersect, DualCurveRepresentsPairing) {
  std::mt19937_64 rng(2);
  for (const auto& ctx : sample_contexts()) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_class(ctx, rng);
      const auto y = random_class(ctx, rng);
      EXPECT_EQ(intersect(x, dual_curve(y)), pairing(x, y));
    }
  }
}

TEST(Intersect, LineThroughPointMeetsConic) {
  const LatticeContext ctx(2, 2, 3);
  const auto d = DivisorClass::from_hm(ctx, Integer(1), {1, 0, 0, 0, 0});
  const CurveClass g(ctx, {1}, {-1, 0, 0, 0, 0});
  EXPECT_EQ(intersect(d, g), 0);
}

TEST(Canonical, AnticanonicalShapes) {
  EXPECT_EQ(anticanonical_class(LatticeContext(2, 2, 3)), DivisorClass::from_hm(LatticeContext(2, 2, 3), Integer(3),
                                                                               {1, 1, 1, 1, 1}));
  for (int n = 2; n <= 6; ++n) {
    const auto ctx = LatticeContext(2, 2, n + 1);
    EXPECT_EQ(anticanonical_class(ctx),
              DivisorClass::from_hm(ctx, Integer(n + 1), std::vector<Integer>(ctx.r(), Integer(n - 1))));
  }
  const LatticeContext ctx(3, 2, 3);
  EXPECT_EQ(anticanonical_class(ctx), DivisorClass(ctx, {3, 3}, {3, 3, 3, 3, 3}));
  EXPECT_EQ(canonical_class(ctx), -anticanonical_class(ctx));
}

TEST(Canonical, DelPezzoDegrees) {
  for (int s = 4; s <= 8; ++s) {
    const LatticeContext ctx(2, s - 3, 3);
    const auto k = canonical_class(ctx);
    EXPECT_EQ(pairing(k, k), 9 - s) << ctx.to_string();
  }
}

TEST(Degree, Values) {
  for (const auto& ctx : sample_contexts()) {
    EXPECT_EQ(degree(DivisorClass::exceptional(ctx, ctx.r())), 1);
  }
  EXPECT_EQ(degree(DivisorClass::hyperplane(LatticeContext(2, 2, 3))), 3);
  EXPECT_EQ(degree(anticanonical_class(LatticeContext(2, 3, 3))), 3);
  EXPECT_EQ(degree(anticanonical_class(LatticeContext(2, 2, 3))), 4);
}

TEST(Degree, Linear) {
  std::mt19937_64 rng(3);
  for (const auto& ctx : sample_contexts()) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_class(ctx, rng);
      const auto y = random_class(ctx, rng);
      EXPECT_EQ(degree(x + y), degree(x) + degree(y));
    }
  }
}

TEST(HDegree, ReadsHCoefficient) {
  const auto ctx = LatticeContext::blowup(3, 6);
  EXPECT_EQ(hdeg(DivisorClass::from_hm(ctx, Integer(2), std::vector<Integer>(6, Integer(1)))), 2);
  EXPECT_EQ(hdeg(DivisorClass::exceptional(ctx, 1)), 0);
  EXPECT_EQ(hdeg(DivisorClass::from_hm(ctx, Integer(2), {2, 2, 1, 1, 1, 1})), 2);
  EXPECT_THROW(hdeg(DivisorClass::hyperplane(LatticeContext(3, 2, 3))), PreconditionError);
}

TEST(Classes, ContextMismatchFailsFast) {
  const auto a = DivisorClass::hyperplane(LatticeContext(2, 2, 3));
  const auto b = DivisorClass::hyperplane(LatticeContext(2, 2, 4));
  EXPECT_THROW(a + b, ContextMismatch);
  EXPECT_THROW(pairing(a, b), ContextMismatch);
  EXPECT_THROW(intersect(a, CurveClass::line(b.ctx())), ContextMismatch);
  EXPECT_THROW(DivisorClass(LatticeContext(2, 2, 3), {1}, {1, 1}), PreconditionError);
}

TEST(Classes, Printing) {
  const auto ctx = LatticeContext(2, 2, 3);
  EXPECT_EQ(DivisorClass::from_hm(ctx, Integer(2), {1, 0, 0, 0, 0}).to_string(), "2H - E1");
  EXPECT_EQ(DivisorClass::exceptional(ctx, 3).to_string(), "E3");
  EXPECT_EQ(DivisorClass::zero(ctx).to_string(), "0");
}
