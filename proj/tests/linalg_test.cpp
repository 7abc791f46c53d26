#include <gtest/gtest.h>

#include <random>

#include "coxforge/errors.hpp"
#include "coxforge/linalg.hpp"

using namespace coxforge;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int low_rank = 0) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  auto entry = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  RationalMatrix m(rows, RationalVector(cols));
  if (low_rank > 0) {
    // product of rows x k and k x cols factors
    RationalMatrix left(rows, RationalVector(low_rank));
    RationalMatrix right(low_rank, RationalVector(cols));
    for (auto& row : left) for (auto& x : row) x = entry();
    for (auto& row : right) for (auto& x : row) x = entry();
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        for (int t = 0; t < low_rank; ++t) m[i][j] += left[i][t] * right[t][j];
      }
    }
    return m;
  }
  for (auto& row : m) for (auto& x : row) x = entry();
  return m;
}

// Textbook rational Gaussian elimination.
std::size_t naive_rank(RationalMatrix m, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Linalg, RankMatchesRationalGauss) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const int k = std::uniform_int_distribution<int>(0, 4)(rng);
    const auto m = random_matrix(rng, rows, cols, k);
    EXPECT_EQ(rank(m, cols), naive_rank(m, cols));
  }
}

TEST(Linalg, KernelIsExactAndComplete) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    const auto m = random_matrix(rng, rows, cols, std::uniform_int_distribution<int>(0, 3)(rng));
    const auto kernel = kernel_basis(m, cols);
    EXPECT_EQ(kernel.size(), cols - naive_rank(m, cols));
    for (const auto& v : kernel) {
      for (const auto& x : multiply(m, v)) EXPECT_EQ(x, 0);
    }
    EXPECT_EQ(naive_rank(kernel, cols), kernel.size());
  }
}

TEST(Linalg, EmptyAndZeroMatrices) {
  EXPECT_EQ(kernel_basis({}, 3).size(), 3u);
  EXPECT_EQ(rank(RationalMatrix(2, RationalVector(4)), 4), 0u);
}

TEST(Linalg, BareissKeepsIntegerRows) {
  const IntegerMatrix m = {{2, 4, 6}, {1, 3, 5}, {3, 7, 11}};
  const Echelon e = bareiss_echelon(m, 3);
  EXPECT_EQ(e.pivots.size(), 2u);
  const auto rows = to_integer_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(-3, 4)}});
  EXPECT_EQ(rows[0], (std::vector<Integer>{3, 2}));
  EXPECT_EQ(rows[1], (std::vector<Integer>{8, -3}));
}

TEST(Linalg, InverseRoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto m = random_matrix(rng, n, n);
    if (naive_rank(m, n) < n) continue;
    const auto inv = inverse(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t < n; ++t) s += m[i][t] * inv[t][j];
        EXPECT_EQ(s, i == j ? 1 : 0);
      }
    }
  }
  EXPECT_THROW(inverse({{1, 2}, {2, 4}}), PreconditionError);
}

TEST(Linalg, IncrementalSpanTracksRank) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const auto m = random_matrix(rng, 10, cols, std::uniform_int_distribution<int>(1, 4)(rng));
    IncrementalSpan span(cols);
    RationalMatrix seen;
    for (const auto& row : m) {
      span.add(row);
      seen.push_back(row);
      EXPECT_EQ(span.rank(), naive_rank(seen, cols));
      EXPECT_TRUE(span.contains(row));
    }
  }
  IncrementalSpan span(3);
  span.add({1, 0, 0});
  EXPECT_FALSE(span.contains({0, 1, 0}));
  EXPECT_TRUE(span.contains({Rational(5, 2), 0, 0}));
}
