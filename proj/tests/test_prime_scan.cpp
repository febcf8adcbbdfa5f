#include "monolab/factor.hpp"
#include "monolab/prime_scan.hpp"

#include <gtest/gtest.h>

using namespace monolab;

namespace {

std::vector<BigInt> big(std::initializer_list<std::uint64_t> v) { return {v.begin(), v.end()}; }

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Factor, SmallExamples) {
  auto f = factor(794);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], (std::pair<BigInt, int>{2, 1}));
  EXPECT_EQ(f.factors[1], (std::pair<BigInt, int>{397, 1}));

  f = factor(-12);
  EXPECT_EQ(f.primes(), big({2, 3}));
  EXPECT_EQ(f.factors[0].second, 2);
  EXPECT_EQ(f.product(), 12);

  EXPECT_TRUE(factor(1).factors.empty());
  EXPECT_THROW(factor(0), std::invalid_argument);
}

TEST(Factor, AgreesWithTrialDivision) {
  for (std::uint64_t n = 2; n < 3000; ++n) {
    const auto f = factor(n);
    EXPECT_EQ(f.product(), n);
    for (const auto& q : f.primes()) EXPECT_TRUE(trial_prime(static_cast<std::uint64_t>(q)));
  }
}

TEST(Factor, TwelveDigitSemiprime) {
  const BigInt p("100000000003"), q("999999999989");
  const auto f = factor(p * q);
  EXPECT_EQ(f.primes(), (std::vector<BigInt>{p, q}));
}

TEST(Factor, LargeCertifiedPrimes) {
  const BigInt m31 = (BigInt(1) << 31) - 1, m61 = (BigInt(1) << 61) - 1, m89 = (BigInt(1) << 89) - 1;
  EXPECT_TRUE(is_prime_certified(m89));
  EXPECT_FALSE(is_prime_certified(m61 * m89));
  EXPECT_FALSE(is_prime_certified(m89 * 3));
  const auto f = factor(m31 * m89);
  EXPECT_EQ(f.primes(), (std::vector<BigInt>{m31, m89}));
}

TEST(PrimeScan, ExceptionalLists) {
  EXPECT_EQ(aggregate_bad_primes(SimpleType('G', 2)), big({2, 3, 5}));
  EXPECT_EQ(aggregate_bad_primes(SimpleType('F', 4)), big({2, 3, 5, 7, 11}));
  EXPECT_EQ(aggregate_bad_primes(SimpleType('E', 6)), big({2, 3, 5, 7, 11}));
  EXPECT_EQ(aggregate_bad_primes(SimpleType('E', 7)), big({2, 3, 5, 7, 11, 13, 17, 19, 31, 37, 53}));
  const auto e8 = run_prime_scan(SimpleType('E', 8));
  ASSERT_TRUE(e8.e8.has_value());
  EXPECT_TRUE(e8.e8->divides_397);
  EXPECT_FALSE(e8.e8->divides_367);
  EXPECT_TRUE(e8.e8->matches_lemma_list);
  EXPECT_FALSE(e8.e8->matches_alternative_list);
  for (const auto& t : exceptional_types()) EXPECT_EQ(check_against_fixture(run_prime_scan(t)), "") << t.name();
}

TEST(PrimeScan, FixtureDiffNamesDiscrepancies) {
  auto r = run_prime_scan(SimpleType('G', 2));
  r.bad_primes = big({2, 3, 7});
  EXPECT_EQ(check_against_fixture(r), "G2: +7 -5");
}

TEST(PrimeScan, Deterministic) {
  const auto a = run_prime_scan(SimpleType('E', 7)), b = run_prime_scan(SimpleType('E', 7));
  ASSERT_EQ(a.per_exponent.size(), b.per_exponent.size());
  for (std::size_t i = 0; i < a.per_exponent.size(); ++i)
    EXPECT_EQ(a.per_exponent[i].coefficients, b.per_exponent[i].coefficients);
  EXPECT_EQ(a.bad_primes, b.bad_primes);
}

TEST(PrimeScan, E6SplitExponents) {
  const auto r = run_prime_scan(SimpleType('E', 6));
  ASSERT_TRUE(r.e6_cartan_scan.has_value());
  for (const auto& s : r.per_exponent) {
    if (e6_split_exponent(s.exponent)) {
      // Zeros exactly at the simple roots fixed by the diagram automorphism.
      EXPECT_EQ(s.zero_in_char_zero, (std::vector<int>{1, 3})) << s.exponent;
    } else {
      EXPECT_TRUE(s.zero_in_char_zero.empty()) << s.exponent;
    }
  }
  for (const auto& c : *r.e6_cartan_scan) EXPECT_NE(c.h1_component, 0);
  EXPECT_THROW(scan_e6_cartan(kostant_decomposition(build_chevalley_algebra(SimpleType('F', 4)))), std::invalid_argument);
}

TEST(PrimeScan, SlSingleExponent) {
  const auto r = run_prime_scan(SimpleType('A', 1));
  ASSERT_EQ(r.per_exponent.size(), 1u);
  EXPECT_EQ(abs(r.per_exponent[0].coefficients[0]), 2);
  EXPECT_TRUE(r.informational);
  EXPECT_THROW(aggregate_bad_primes(SimpleType('A', 3)), std::invalid_argument);
}

TEST(PrimeScan, CoefficientsScaleLinearly) {
  auto k = kostant_decomposition(build_chevalley_algebra(SimpleType('F', 4)));
  const auto base = scan_simple_projections(k);
  for (auto& pr : k.pairs) pr.p = pr.p.scaled(6);
  const auto scaled = scan_simple_projections(k);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base[i].coefficients.size(); ++j)
      EXPECT_EQ(scaled[i].coefficients[j], 6 * base[i].coefficients[j]);
}

// Recompute the projections for E7 entirely over GF(ell), starting from the
// centralizer of X computed mod ell, and compare vanishing with the list.
TEST(PrimeScan, NativePrimeFieldCrossCheck) {
  const auto alg = build_chevalley_algebra(SimpleType('E', 7));
  const auto bad = aggregate_bad_primes(SimpleType('E', 7));
  for (std::uint32_t ell : {19u, 23u, 29u, 31u, 37u, 41u, 53u, 59u}) {
    const auto f = prime_field(ell);
    const auto tr = build_principal_sl2<PrimeField>(alg, f);
    const auto cent = centralizer_of_X_mod(alg, f);
    ASSERT_EQ(static_cast<int>(cent.size()), alg->rank());
    bool some_zero = false;
    for (const auto& v : cent) {
      const int m = alg->grading(v.terms().begin()->first);
      const auto w = ad_power(tr.Y, m + 1, v);
      for (int i = 0; i < alg->rank(); ++i)
        if (w.coeff(alg->y_index(i)).is_zero()) some_zero = true;
    }
    const bool listed = std::find(bad.begin(), bad.end(), BigInt(ell)) != bad.end();
    EXPECT_EQ(some_zero, listed) << "ell = " << ell;
  }
}
