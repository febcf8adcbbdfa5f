#include "monolab/rootsys.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using monolab::RootDatum;
using monolab::RootVec;
using monolab::SimpleType;

namespace {

std::vector<SimpleType> sample_types() {
  std::vector<SimpleType> v = monolab::exceptional_types();
  for (int n = 1; n <= 7; ++n) v.emplace_back('A', n);
  for (int n = 2; n <= 6; ++n) v.emplace_back('B', n);
  for (int n = 3; n <= 6; ++n) v.emplace_back('C', n);
  for (int n = 4; n <= 7; ++n) v.emplace_back('D', n);
  return v;
}

// Coxeter numbers from the classification tables.
int table_coxeter(const SimpleType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case 'A': return n + 1;
    case 'B':
    case 'C': return 2 * n;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 12;
    default: return 6;
  }
}

int table_positive_roots(const SimpleType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

}  // namespace

TEST(SimpleType, ParsesAndRejects) {
  EXPECT_EQ(SimpleType::parse("E8"), SimpleType('E', 8));
  EXPECT_EQ(SimpleType::parse("g2").name(), "G2");
  for (const char* bad : {"A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "X4", "", "E"})
    EXPECT_THROW(SimpleType::parse(bad), std::invalid_argument) << bad;
}

TEST(RootDatum, CountsMatchClassification) {
  for (const auto& t : sample_types()) {
    const RootDatum d(t);
    EXPECT_EQ(d.num_positive(), table_positive_roots(t)) << t.name();
    EXPECT_EQ(d.coxeter_number(), table_coxeter(t)) << t.name();
    // |Phi| = rank * h
    EXPECT_EQ(d.num_roots(), d.rank() * d.coxeter_number()) << t.name();
    EXPECT_EQ(d.dim(), d.num_roots() + d.rank());
  }
}

TEST(RootDatum, ExceptionalExponents) {
  EXPECT_EQ(RootDatum(SimpleType('G', 2)).exponents(), (std::vector<int>{1, 5}));
  EXPECT_EQ(RootDatum(SimpleType('F', 4)).exponents(), (std::vector<int>{1, 5, 7, 11}));
  EXPECT_EQ(RootDatum(SimpleType('E', 6)).exponents(), (std::vector<int>{1, 4, 5, 7, 8, 11}));
  EXPECT_EQ(RootDatum(SimpleType('E', 7)).exponents(), (std::vector<int>{1, 5, 7, 9, 11, 13, 17}));
  EXPECT_EQ(RootDatum(SimpleType('E', 8)).exponents(), (std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(RootDatum, ExponentProperties) {
  for (const auto& t : sample_types()) {
    const RootDatum d(t);
    const auto& m = d.exponents();
    const int h = d.coxeter_number();
    ASSERT_EQ(static_cast<int>(m.size()), d.rank());
    EXPECT_EQ(std::accumulate(m.begin(), m.end(), 0), d.num_positive()) << t.name();
    EXPECT_EQ(m.front(), 1);
    EXPECT_EQ(m.back(), h - 1);
    // m <-> h - m is a bijection of the exponent multiset.
    std::multiset<int> a(m.begin(), m.end()), b;
    for (int x : m) b.insert(h - x);
    EXPECT_EQ(a, b) << t.name();
    // The height partition and the exponents are conjugate partitions.
    const auto& hc = d.height_counts();
    for (int k = 1; k < h; ++k) {
      const int at_least = static_cast<int>(std::count_if(m.begin(), m.end(), [k](int x) { return x >= k; }));
      EXPECT_EQ(hc[k - 1], at_least) << t.name() << " height " << k;
    }
  }
}

TEST(RootDatum, SimpleRootsComeFirstAndHeightsAscend) {
  for (const auto& t : sample_types()) {
    const RootDatum d(t);
    for (int i = 0; i < d.rank(); ++i) {
      RootVec e(d.rank(), 0);
      e[i] = 1;
      EXPECT_EQ(d.positive_root(i), e) << t.name();
    }
    for (int i = 1; i < d.num_positive(); ++i)
      EXPECT_LE(d.height(d.positive_root(i - 1)), d.height(d.positive_root(i)));
  }
}

TEST(RootDatum, ReflectionStable) {
  for (const auto& t : sample_types()) {
    const RootDatum d(t);
    for (int idx = 0; idx < d.num_roots(); ++idx) {
      const RootVec b = d.root(idx);
      for (int i = 0; i < d.rank(); ++i) {
        RootVec s = b;
        s[i] -= d.pairing_with_simple_coroot(b, i);
        EXPECT_TRUE(d.is_root(s)) << t.name();
      }
    }
  }
}

TEST(RootDatum, CartanPairing) {
  for (const auto& t : sample_types()) {
    const RootDatum d(t);
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j) EXPECT_EQ(d.pairing_with_simple_coroot(d.positive_root(j), i), d.cartan()[i][j]);
    for (const auto& r : d.positive_roots()) {
      // <a, a^vee> = 2
      const RootVec c = d.coroot(r);
      int s = 0;
      for (int i = 0; i < d.rank(); ++i) s += c[i] * d.pairing_with_simple_coroot(r, i);
      EXPECT_EQ(s, 2);
    }
  }
}

TEST(RootDatum, HighestRoots) {
  EXPECT_EQ(RootDatum(SimpleType('E', 8)).highest_root(), (RootVec{2, 3, 4, 6, 5, 4, 3, 2}));
  EXPECT_EQ(RootDatum(SimpleType('E', 6)).highest_root(), (RootVec{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(RootDatum(SimpleType('F', 4)).highest_root(), (RootVec{2, 3, 4, 2}));
  EXPECT_EQ(RootDatum(SimpleType('G', 2)).highest_root(), (RootVec{3, 2}));
}

TEST(RootDatum, MinusOneInWeylGroup) {
  for (const auto& t : sample_types()) {
    bool expected = true;
    if (t.family() == 'A') expected = t.rank() == 1;
    if (t.family() == 'D') expected = t.rank() % 2 == 0;
    if (t == SimpleType('E', 6)) expected = false;
    EXPECT_EQ(monolab::weyl_contains_minus_one(t), expected) << t.name();
  }
}

TEST(RootDatum, NegativesAndLookup) {
  const RootDatum d(SimpleType('B', 3));
  for (int i = 0; i < d.num_roots(); ++i) {
    RootVec neg = d.root(i);
    for (int& c : neg) c = -c;
    EXPECT_EQ(d.find_root(neg), d.negate_index(i));
  }
  EXPECT_FALSE(d.find_root({1, 0, 1}).has_value());
  EXPECT_THROW(d.height({5, 5, 5}), std::invalid_argument);
  EXPECT_THROW(d.coroot({0, 0, 0}), std::invalid_argument);
}
