#pragma once

// Obstruction-prime scan. For each exponent m with Kostant eigenvector p,
// ad(Y)^{m+1}(p) lies in the span of the negative simple root vectors; the
// primes dividing its coefficients are the characteristics in which the
// summand Sym^{2m} loses a simple-root projection. E6 needs a variant that
// also reads the h[1]-component of ad(Y)^m(p).

#include "monolab/factor.hpp"
#include "monolab/fixtures.hpp"
#include "monolab/principal_sl2.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace monolab {

struct ExponentScan {
  int exponent = 0;
  std::vector<BigInt> coefficients;   // coefficient of y_i, i simple
  std::vector<int> zero_in_char_zero;  // simple indices (0-based) with coefficient 0
};

struct CartanScan {
  int exponent = 0;
  BigInt h1_component;
};

struct E8Adjudication {
  bool divides_367 = false;
  bool divides_397 = false;
  bool matches_lemma_list = false;
  bool matches_alternative_list = false;
};

struct PrimeScanReport {
  SimpleType type;
  std::vector<ExponentScan> per_exponent;
  std::optional<std::vector<CartanScan>> e6_cartan_scan;
  std::vector<BigInt> bad_primes;
  bool informational = false;  // classical types: not checked against fixtures
  std::optional<E8Adjudication> e8;
};

/// ad(Y)^{m_i+1}(p_i) for every Kostant pair, projected onto y_1..y_l.
inline std::vector<ExponentScan> scan_simple_projections(const KostantDecomposition& k) {
  const auto& alg = *k.triple.X.algebra();
  const int l = alg.rank();
  std::vector<ExponentScan> out;
  for (const auto& [m, p] : k.pairs) {
    const auto v = ad_power(k.triple.Y, m + 1, p);
    ExponentScan s{m, std::vector<BigInt>(l, 0), {}};
    for (const auto& [b, c] : v.terms()) {
      if (!alg.is_y(b) || b - alg.num_positive() >= l)
        throw std::logic_error("scan: ad(Y)^(m+1) p has support outside the negative simple root spaces (" +
                               alg.basis_label(b) + ")");
      s.coefficients[b - alg.num_positive()] = c;
    }
    for (int i = 0; i < l; ++i)
      if (s.coefficients[i] == 0) s.zero_in_char_zero.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

/// h[1]-component (alpha_1 evaluated on the Cartan part) of ad(Y)^{m_j}(p_j).
inline std::vector<CartanScan> scan_e6_cartan(const KostantDecomposition& k) {
  const auto& alg = *k.triple.X.algebra();
  if (!(alg.datum().simple_type() == SimpleType('E', 6)))
    throw std::invalid_argument("scan_e6_cartan: type " + alg.datum().simple_type().name() + " is not E6");
  std::vector<CartanScan> out;
  for (const auto& [m, p] : k.pairs) {
    const auto t = ad_power(k.triple.Y, m, p);
    for (const auto& [b, c] : t.terms())
      if (!alg.is_cartan(b)) throw std::logic_error("scan_e6_cartan: ad(Y)^m p is not in the Cartan subalgebra");
    out.push_back({m, cartan_dual_coordinates(t)[0]});
  }
  return out;
}

inline void add_prime_divisors(const BigInt& n, std::set<BigInt>& primes) {
  for (const auto& q : factor(n).primes()) primes.insert(q);
}

namespace detail {

inline bool same_list(const std::vector<BigInt>& a, const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace detail

/// Exponents of E6 whose sl2-string misses the outer-automorphism-fixed simple roots.
inline bool e6_split_exponent(int m) { return m == 4 || m == 8; }

/// Runs the full pipeline for one type and applies its aggregation rule.
inline PrimeScanReport run_prime_scan(const SimpleType& t) {
  const auto alg = build_chevalley_algebra(t);
  const auto k = kostant_decomposition(alg);
  PrimeScanReport r{t, scan_simple_projections(k), std::nullopt, {}, !t.is_exceptional(), std::nullopt};
  std::set<BigInt> primes;
  const bool e6 = t == SimpleType('E', 6);
  if (e6) {
    r.e6_cartan_scan = scan_e6_cartan(k);
    for (const auto& s : r.per_exponent) {
      if (!e6_split_exponent(s.exponent)) {
        if (!s.zero_in_char_zero.empty())
          throw std::logic_error("E6 scan: unexpected zero projection for exponent " + std::to_string(s.exponent));
        for (const auto& c : s.coefficients) add_prime_divisors(c, primes);
      } else {
        if (s.coefficients[0] == 0) throw std::logic_error("E6 scan: alpha_1 projection vanishes");
        add_prime_divisors(s.coefficients[0], primes);
      }
    }
    for (const auto& c : *r.e6_cartan_scan) {
      if (c.h1_component == 0) throw std::logic_error("E6 scan: h[1]-component vanishes");
      add_prime_divisors(c.h1_component, primes);
    }
  } else {
    for (const auto& s : r.per_exponent) {
      if (t.is_exceptional() && !s.zero_in_char_zero.empty())
        throw std::logic_error("scan: zero projection in characteristic zero for " + t.name());
      for (const auto& c : s.coefficients)
        if (c != 0) add_prime_divisors(c, primes);
    }
  }
  r.bad_primes.assign(primes.begin(), primes.end());
  if (t == SimpleType('E', 8)) {
    E8Adjudication a;
    a.divides_367 = primes.count(367) != 0;
    a.divides_397 = primes.count(397) != 0;
    a.matches_lemma_list = detail::same_list(r.bad_primes, fixtures::bad_prime_lists().at("E8"));
    a.matches_alternative_list = detail::same_list(r.bad_primes, fixtures::e8_alternative_list());
    r.e8 = a;
  }
  return r;
}

inline std::vector<BigInt> aggregate_bad_primes(const SimpleType& t) {
  if (!t.is_exceptional()) throw std::invalid_argument("aggregate_bad_primes: " + t.name() + " is not exceptional");
  return run_prime_scan(t).bad_primes;
}

/// Mismatch description against the embedded fixture, empty when the scan agrees.
inline std::string check_against_fixture(const PrimeScanReport& r) {
  const auto& lists = fixtures::bad_prime_lists();
  auto it = lists.find(r.type.name());
  if (it == lists.end()) return {};
  if (r.type == SimpleType('E', 8) && r.e8 && (r.e8->matches_lemma_list || r.e8->matches_alternative_list)) return {};
  if (detail::same_list(r.bad_primes, it->second)) return {};
  std::set<BigInt> got(r.bad_primes.begin(), r.bad_primes.end()), want(it->second.begin(), it->second.end());
  std::string diff;
  for (const auto& q : got)
    if (!want.count(q)) diff += " +" + q.str();
  for (const auto& q : want)
    if (!got.count(q)) diff += " -" + q.str();
  return r.type.name() + ":" + diff;
}

}  // namespace monolab
