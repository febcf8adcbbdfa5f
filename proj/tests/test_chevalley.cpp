#include "monolab/chevalley.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace monolab;

namespace {

using ZElem = LieElement<IntegerRing>;

ZElem basis(const AlgebraPtr& a, int i) { return ZElem::basis(a, IntegerRing{}, i); }

std::vector<SimpleType> small_types() {
  return {SimpleType('A', 1), SimpleType('A', 2), SimpleType('A', 3), SimpleType('B', 2), SimpleType('B', 3),
          SimpleType('C', 3), SimpleType('D', 4), SimpleType('G', 2)};
}

}  // namespace

TEST(Chevalley, JacobiExhaustiveSmallRank) {
  for (const auto& t : small_types()) {
    const auto alg = build_chevalley_algebra(t);
    for (int i = 0; i < alg->dim(); ++i)
      for (int j = i + 1; j < alg->dim(); ++j)
        for (int k = j + 1; k < alg->dim(); ++k) ASSERT_TRUE(jacobi_holds(*alg, i, j, k)) << t.name() << " " << i << j << k;
  }
}

TEST(Chevalley, JacobiSampledE6) {
  const auto alg = build_chevalley_algebra(SimpleType('E', 6));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, alg->dim() - 1);
  for (int s = 0; s < 20000; ++s) ASSERT_TRUE(jacobi_holds(*alg, pick(rng), pick(rng), pick(rng)));
}

TEST(Chevalley, StringRuleAllTypes) {
  for (const auto& t : small_types()) EXPECT_NO_THROW(build_chevalley_algebra(t)->verify_structure_constants());
  for (const auto& t : exceptional_types()) EXPECT_NO_THROW(build_chevalley_algebra(t)->verify_structure_constants());
}

TEST(Chevalley, MaximalStructureConstantMagnitude) {
  auto max_abs = [](const SimpleType& t) {
    const auto alg = build_chevalley_algebra(t);
    int m = 0;
    for (int a = 0; a < alg->datum().num_roots(); ++a)
      for (int b = 0; b < alg->datum().num_roots(); ++b) m = std::max(m, std::abs(alg->structure_constant(a, b)));
    return m;
  };
  EXPECT_EQ(max_abs(SimpleType('G', 2)), 3);
  EXPECT_EQ(max_abs(SimpleType('F', 4)), 2);
  EXPECT_EQ(max_abs(SimpleType('B', 3)), 2);
  EXPECT_EQ(max_abs(SimpleType('E', 8)), 1);
  EXPECT_EQ(max_abs(SimpleType('A', 4)), 1);
}

TEST(Chevalley, Antisymmetry) {
  const auto alg = build_chevalley_algebra(SimpleType('F', 4));
  for (int i = 0; i < alg->dim(); ++i)
    for (int j = 0; j < alg->dim(); ++j) {
      const auto u = basis(alg, i), v = basis(alg, j);
      EXPECT_EQ(bracket(u, v), ZElem(alg, IntegerRing{}) - bracket(v, u));
    }
}

TEST(Chevalley, GradingIsAdditive) {
  const auto alg = build_chevalley_algebra(SimpleType('G', 2));
  for (int i = 0; i < alg->dim(); ++i)
    for (int j = 0; j < alg->dim(); ++j) {
      const auto z = bracket(basis(alg, i), basis(alg, j));
      for (const auto& [k, c] : z.terms()) EXPECT_EQ(alg->grading(k), alg->grading(i) + alg->grading(j));
    }
}

TEST(Chevalley, RootVectorPairsGiveCoroots) {
  for (const auto& t : {SimpleType('G', 2), SimpleType('B', 3), SimpleType('E', 6)}) {
    const auto alg = build_chevalley_algebra(t);
    const auto& d = alg->datum();
    for (int a = 0; a < d.num_positive(); ++a) {
      ZElem coroot(alg, IntegerRing{});
      const auto c = d.coroot(d.positive_root(a));
      for (int i = 0; i < d.rank(); ++i) coroot.add_term(alg->h_index(i), c[i]);
      EXPECT_EQ(bracket(basis(alg, alg->y_index(a)), basis(alg, alg->x_index(a))), coroot) << t.name();
    }
  }
}

TEST(Chevalley, CartanActsByPairing) {
  const auto alg = build_chevalley_algebra(SimpleType('F', 4));
  const auto& d = alg->datum();
  for (int a = 0; a < d.num_roots(); ++a) {
    const int b = a < d.num_positive() ? alg->x_index(a) : alg->y_index(a - d.num_positive());
    for (int i = 0; i < d.rank(); ++i) {
      const int pairing = d.pairing_with_simple_coroot(d.root(a), i);
      EXPECT_EQ(bracket(basis(alg, b), basis(alg, alg->h_index(i))), ZElem::basis(alg, IntegerRing{}, b, pairing));
    }
  }
}

TEST(Chevalley, CartanDualCoordinates) {
  // alpha_j(alpha_i^vee) = A[i][j]
  const auto alg = build_chevalley_algebra(SimpleType('G', 2));
  const auto& cm = alg->datum().cartan();
  for (int i = 0; i < 2; ++i) {
    const auto v = cartan_dual_coordinates(basis(alg, alg->h_index(i)));
    for (int j = 0; j < 2; ++j) EXPECT_EQ(v[j], cm[i][j]);
  }
}

TEST(Chevalley, AdPowerInSl2) {
  const auto alg = build_chevalley_algebra(SimpleType('A', 1));
  const auto y = basis(alg, alg->y_index(0)), x = basis(alg, alg->x_index(0));
  const auto v = ad_power(y, 2, x);
  ASSERT_EQ(v.terms().size(), 1u);
  EXPECT_EQ(v.terms().begin()->first, alg->y_index(0));
  EXPECT_EQ(abs(v.terms().begin()->second), 2);
  EXPECT_TRUE(ad_power(y, 3, x).is_zero());
  EXPECT_EQ(ad_power(y, 0, x), x);
  EXPECT_THROW(ad_power(y, -1, x), std::invalid_argument);
}

TEST(Chevalley, RejectsMixedOperands) {
  const auto a = build_chevalley_algebra(SimpleType('A', 2));
  const auto b = build_chevalley_algebra(SimpleType('A', 2));
  EXPECT_THROW(bracket(basis(a, 0), basis(b, 0)), std::invalid_argument);
  const auto u = LieElement<PrimeField>::basis(a, prime_field(5), 0);
  const auto v = LieElement<PrimeField>::basis(a, prime_field(7), 1);
  EXPECT_THROW(bracket(u, v), std::invalid_argument);
  EXPECT_THROW(u + v, std::invalid_argument);
  EXPECT_THROW(ModP(1, 5) + ModP(1, 7), std::invalid_argument);
  EXPECT_THROW(basis(a, a->dim()), std::out_of_range);
}

TEST(Chevalley, ReductionCommutesWithBracket) {
  const auto alg = build_chevalley_algebra(SimpleType('G', 2));
  for (int i = 0; i < alg->dim(); ++i)
    for (int j = 0; j < alg->dim(); ++j) {
      const auto u = basis(alg, i).scaled(3), v = basis(alg, j).scaled(-2);
      EXPECT_EQ(base_change(bracket(u, v), 5), bracket(base_change(u, 5), base_change(v, 5)));
    }
}

TEST(Chevalley, StructureTableListsNonzeroBrackets) {
  const auto alg = build_chevalley_algebra(SimpleType('A', 1));
  const auto table = alg->structure_table();
  // sl2: [x,y], [x,h], [y,h] are all nonzero.
  EXPECT_EQ(table.size(), 3u);
  for (const auto& [i, j, k, c] : table) {
    EXPECT_LT(i, j);
    EXPECT_NE(c, 0);
  }
}
