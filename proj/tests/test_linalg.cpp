#include "monolab/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace monolab;

namespace {

BigVec mat_vec(const BigMatrix& m, const BigVec& v) {
  BigVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// Rank over Q by fraction-free elimination.
int rational_rank(BigMatrix m) {
  int r = 0;
  const std::size_t n = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const BigInt f = m[i][c], g = m[r][c];
      for (std::size_t k = 0; k < n; ++k) m[i][k] = m[i][k] * g - m[r][k] * f;
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(Linalg, ExtendedGcd) {
  for (int a = -20; a <= 20; ++a)
    for (int b = -20; b <= 20; ++b) {
      auto [g, s, t] = extended_gcd(a, b);
      EXPECT_EQ(g, gcd(BigInt(a), BigInt(b)));
      EXPECT_EQ(s * a + t * b, g);
    }
}

TEST(Linalg, KernelIsSaturated) {
  // x + 2y + 3z = 0 has kernel lattice of index 1 spanned by primitive vectors.
  const BigMatrix m{{2, 4, 6}};
  const auto k = integer_kernel(m, 3);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    EXPECT_EQ(mat_vec(m, v), BigVec{0});
    EXPECT_EQ(content(v), 1);
  }
  // A rank-2 sublattice of Z^3 is saturated iff its 2x2 minors are coprime.
  BigInt g = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) g = gcd(g, BigInt(k[0][a] * k[1][b] - k[0][b] * k[1][a]));
  EXPECT_EQ(g, 1);
}

TEST(Linalg, RandomKernelsHaveFullDimension) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 3 + trial % 6;
    BigMatrix m(rows, BigVec(cols));
    for (auto& row : m)
      for (auto& x : row) x = e(rng);
    const auto k = integer_kernel(m, cols);
    EXPECT_EQ(static_cast<int>(k.size()), static_cast<int>(cols) - rational_rank(m));
    for (const auto& v : k) EXPECT_EQ(mat_vec(m, v), BigVec(rows, 0));
    if (!k.empty()) {
      EXPECT_EQ(rational_rank(k), static_cast<int>(k.size()));
    }
  }
}

TEST(Linalg, HermiteFormDropsZeroRows) {
  const auto h = hermite_normal_form({{2, 4}, {1, 2}, {0, 0}});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], (BigVec{1, 2}));
}

TEST(Linalg, SparseEchelonMatchesDenseRank) {
  std::mt19937 rng(5);
  const auto f = prime_field(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 2 + trial % 7, cols = 3 + trial % 5;
    std::vector<std::vector<std::uint32_t>> dense(rows, std::vector<std::uint32_t>(cols));
    SparseEchelon<PrimeField> ech(f, cols);
    for (auto& row : dense) {
      SparseEchelon<PrimeField>::Row sparse;
      for (int c = 0; c < cols; ++c) {
        row[c] = rng() % 7 < 3 ? rng() % 7 : 0;
        if (row[c]) sparse.emplace(c, ModP(row[c], 7));
      }
      ech.insert(sparse);
    }
    EXPECT_EQ(ech.rank(), rank_mod_p(dense, 7));
    const auto ker = ech.kernel();
    EXPECT_EQ(static_cast<int>(ker.size()), cols - ech.rank());
    for (const auto& v : ker)
      for (const auto& row : dense) {
        std::uint64_t s = 0;
        for (int c = 0; c < cols; ++c) s += row[c] * v[c].value();
        EXPECT_EQ(s % 7, 0u);
      }
  }
}

TEST(Linalg, RationalEchelonKernel) {
  SparseEchelon<RationalField> ech(RationalField{}, 3);
  ech.insert({{0, Rational(1)}, {1, Rational(1, 2)}});
  ech.insert({{0, Rational(2)}, {1, Rational(1)}});
  EXPECT_EQ(ech.rank(), 1);
  EXPECT_EQ(ech.kernel().size(), 2u);
}
