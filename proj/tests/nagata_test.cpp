#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "coxforge/blowup.hpp"
#include "coxforge/errors.hpp"
#include "coxforge/nagata.hpp"

using namespace coxforge;

namespace {

// Sum over permutations with explicit sign.
MultiPoly leibniz(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly total(m[0][0].vars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    MultiPoly term = MultiPoly::constant(m[0][0].vars(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

PolyMatrix f_matrix(const std::vector<int>& idx, const NagataParams& np) {
  const int k = (static_cast<int>(idx.size()) - 1) / 2;
  PolyMatrix m;
  for (int j = 0; j <= k; ++j) {
    std::vector<MultiPoly> row;
    for (int i : idx) {
      Rational p = 1;
      for (int t = 0; t < j; ++t) p *= np.a(i);
      row.push_back(p * np.x(i));
    }
    m.push_back(row);
  }
  for (int j = 0; j < k; ++j) {
    std::vector<MultiPoly> row;
    for (int i : idx) {
      Rational p = 1;
      for (int t = 0; t < j; ++t) p *= np.a(i);
      row.push_back(p * np.y(i));
    }
    m.push_back(row);
  }
  return m;
}

MultiPoly t(const NagataParams& np, int i) { return MultiPoly::variable(np.variables(), "t" + std::to_string(i)); }

}  // namespace

TEST(NagataParams, Validation) {
  EXPECT_THROW(NagataParams({1, 2, 3, 4}), PreconditionError);
  EXPECT_THROW(NagataParams({1, 2, 3, 4, 2}), PreconditionError);
  EXPECT_EQ(NagataParams::random(6, 9).params(), NagataParams::random(6, 9).params());
  EXPECT_EQ(NagataParams::standard(5).variables().size(), 12u);
  EXPECT_EQ(odd_subsets(7).size(), 64u);
}

TEST(BuildF, SmallCases) {
  const auto np = NagataParams::standard(5);
  EXPECT_EQ(build_F({3}, np), np.x(3));
  const MultiPoly f = build_F({1, 2, 3}, np);
  EXPECT_EQ(f, leibniz({{np.x(1), np.x(2), np.x(3)},
                        {Rational(1) * np.x(1), Rational(2) * np.x(2), Rational(3) * np.x(3)},
                        {np.y(1), np.y(2), np.y(3)}}));
  EXPECT_THROW(build_F({1, 2}, np), PreconditionError);
  EXPECT_THROW(build_F({1, 1, 2}, np), PreconditionError);
  EXPECT_THROW(build_F({1, 2, 9}, np), PreconditionError);
}

TEST(BuildF, AgreesWithLeibniz) {
  for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
    const auto np = seed == 0 ? NagataParams::standard(7) : NagataParams::random(7, seed);
    for (const auto& idx : odd_subsets(7)) {
      if (idx.size() > 5) continue;
      EXPECT_EQ(build_F(idx, np), leibniz(f_matrix(idx, np)));
    }
  }
}

TEST(BuildF, ColumnScaling) {
  const auto np = NagataParams::standard(6);
  const auto vars = np.variables();
  const MultiPoly f = build_F({1, 3, 4, 5, 6}, np);
  for (int i : {1, 4}) {
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < vars.size(); ++v) images.push_back(MultiPoly::variable(vars, v));
    images[i - 1] = Rational(3) * np.x(i);
    images[np.r() + i - 1] = Rational(3) * np.y(i);
    EXPECT_EQ(f.substitute(images, vars), Rational(3) * f);
  }
}

TEST(Substitution, Examples) {
  const auto np = NagataParams::standard(5);
  EXPECT_EQ(nagata_substitute(np.y(1), np), np.y(1) + t(np, 1) * np.x(1) + np.a(1) * (t(np, 2) * np.x(1)));
  EXPECT_EQ(nagata_substitute(np.x(1), np), np.x(1));
  EXPECT_THROW(nagata_substitute(t(np, 1), np), PreconditionError);
  EXPECT_FALSE(is_invariant(np.y(1), np));
  EXPECT_FALSE(is_invariant(np.x(1) * np.y(2) - np.x(2) * np.y(1), np));
  EXPECT_TRUE(is_invariant(build_F({1, 2, 3}, np), np));
}

TEST(Substitution, AllDeterminantsInvariant) {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t seed : {11ULL, 12ULL}) {
      const auto np = NagataParams::random(n + 3, seed);
      for (const auto& idx : odd_subsets(n + 3)) EXPECT_TRUE(is_invariant(build_F(idx, np), np));
    }
  }
}

TEST(TorusWeight, Values) {
  const auto np = NagataParams::standard(6);
  const auto tw = torus_weight(build_F({1, 2, 4, 5, 6}, np), np);
  EXPECT_EQ(tw.w, (std::vector<int>{1, 1, 0, 1, 1, 1}));
  EXPECT_EQ(tw.deg_x, 3);
  EXPECT_EQ(tw.deg_y, 2);
  const auto tx = torus_weight(np.x(1), np);
  EXPECT_EQ(tx.w, (std::vector<int>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(tx.deg_x, 1);
  EXPECT_EQ(tx.deg_y, 0);
  for (const auto& j : build_J(np, 3)) {
    const auto tj = torus_weight(j, np);
    EXPECT_EQ(tj.w, std::vector<int>(6, 1));
    EXPECT_EQ(tj.deg_x, 5);
    EXPECT_EQ(tj.deg_y, 1);
  }
  try {
    torus_weight(np.x(1) + np.x(2) * np.y(2), np);
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("(x1, y1)"), std::string::npos);
  }
  EXPECT_THROW(torus_weight(np.x(1) * np.x(2) + np.x(1) * np.y(2), np), PreconditionError);
  EXPECT_THROW(torus_weight(MultiPoly(np.variables()), np), PreconditionError);
}

TEST(ClassCorrespondence, GeneratorsMatchMinimalDivisors) {
  for (int n = 2; n <= 4; ++n) {
    const int r = n + 3;
    const auto np = NagataParams::standard(r);
    const BlowupContext bc(n, r);
    std::set<DivisorClass> images;
    for (const auto& cols : odd_subsets(r)) {
      const MultiPoly f = build_F(cols, np);
      const DivisorClass d = divisor_class_of(f, np, n);
      images.insert(d);
      EXPECT_EQ(degree(d), 1);
      if (cols.size() == 1) {
        EXPECT_EQ(d, DivisorClass::exceptional(bc.lattice(), cols[0]));
        continue;
      }
      std::vector<int> complement;
      for (int i = 1; i <= r; ++i) {
        if (std::find(cols.begin(), cols.end(), i) == cols.end()) complement.push_back(i);
      }
      EXPECT_EQ(d, minimal_divisor(bc, (static_cast<int>(cols.size()) - 1) / 2, complement));
    }
    std::set<DivisorClass> expected;
    for (const auto& e : enumerate_minimal(bc)) expected.insert(e);
    for (int i = 1; i <= r; ++i) expected.insert(DivisorClass::exceptional(bc.lattice(), i));
    EXPECT_EQ(images, expected);
  }
}

TEST(ClassCorrespondence, ProductsAreAdditive) {
  const auto np = NagataParams::random(6, 4);
  const MultiPoly a = build_F({1, 2, 3}, np);
  const MultiPoly b = build_F({2, 4, 5, 6, 1}, np);
  const MultiPoly ab = a * b;
  EXPECT_TRUE(is_invariant(ab, np));
  EXPECT_EQ(divisor_class_of(ab, np, 3), divisor_class_of(a, np, 3) + divisor_class_of(b, np, 3));
  EXPECT_THROW(divisor_class_of(a, np, 4), PreconditionError);
  EXPECT_THROW(divisor_class_of(np.y(1) + np.x(1) * np.y(2), np, 3), PreconditionError);
}

TEST(JInvariants, CountInvarianceAndClass) {
  for (int n = 2; n <= 5; ++n) {
    const auto np = NagataParams::random(n + 3, 21 + n);
    const auto js = build_J(np, n);
    EXPECT_EQ(static_cast<int>(js.size()), n + 1);
    for (const auto& j : js) {
      EXPECT_TRUE(is_invariant(j, np));
      EXPECT_EQ(divisor_class_of(j, np, n), DivisorClass::hyperplane(LatticeContext::blowup(n, n + 3)));
    }
  }
  EXPECT_THROW(build_J(NagataParams::standard(6), 2), PreconditionError);
}
