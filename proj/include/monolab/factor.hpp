#pragma once

// Integer factorization for structure-constant coefficients: trial division
// up to 10^6, then Pollard-Brent rho. Every reported factor carries a
// primality proof: deterministic Miller-Rabin below 3.3e24 and a Lucas
// (n-1) certificate above.

#include "monolab/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace monolab {

struct Factorization {
  BigInt n;
  std::vector<std::pair<BigInt, int>> factors;  // sorted by prime

  BigInt product() const {
    BigInt p = 1;
    for (const auto& [q, e] : factors)
      for (int i = 0; i < e; ++i) p *= q;
    return p;
  }
  std::vector<BigInt> primes() const {
    std::vector<BigInt> out;
    for (const auto& f : factors) out.push_back(f.first);
    return out;
  }
};

namespace detail {

inline constexpr std::uint32_t kTrialLimit = 1000000;

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> comp(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (comp[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialLimit; j += i) comp[j] = true;
    }
    return out;
  }();
  return primes;
}

inline BigInt powm(const BigInt& b, const BigInt& e, const BigInt& m) { return boost::multiprecision::powm(b, e, m); }

inline bool miller_rabin_bases(const BigInt& n, std::initializer_list<unsigned> bases) {
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : bases) {
    if (n == a) return true;
    BigInt x = powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

inline Factorization factor(const BigInt& n);

/// Proven primality. Below 3.317e24 the first thirteen prime bases are a
/// deterministic Miller-Rabin set; above that a Lucas witness is searched
/// for against the full factorization of n-1.
inline bool is_prime_certified(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max()) return is_prime_u64(static_cast<std::uint64_t>(n));
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u})
    if (n % q == 0) return false;
  const BigInt mr_bound("3317044064679887385961981");
  const bool mr = detail::miller_rabin_bases(n, {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41});
  if (n < mr_bound || !mr) return mr;
  const Factorization nm1 = factor(n - 1);
  for (unsigned a = 2; a < 10000; ++a) {
    if (detail::powm(BigInt(a), n - 1, n) != 1) return false;
    bool witness = true;
    for (const auto& [q, e] : nm1.factors)
      if (detail::powm(BigInt(a), (n - 1) / q, n) == 1) {
        witness = false;
        break;
      }
    if (witness) return true;
  }
  throw std::runtime_error("is_prime_certified: no Lucas witness found for " + n.str());
}

namespace detail {

/// Nontrivial divisor of a composite n with no factor below the trial limit.
inline BigInt pollard_brent(const BigInt& n, std::mt19937_64& rng) {
  if ((n & 1) == 0) return 2;
  const BigInt bound = n - 1;
  while (true) {
    BigInt y = BigInt(rng()) % bound + 1;
    const BigInt c = BigInt(rng()) % bound + 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    BigInt g = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = BigInt(q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(BigInt(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split(const BigInt& n, std::vector<BigInt>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime_certified(n)) {
    out.push_back(n);
    return;
  }
  const BigInt d = pollard_brent(n, rng);
  split(d, out, rng);
  split(n / d, out, rng);
}

}  // namespace detail

/// Complete factorization of |n|; n = 0 is rejected.
inline Factorization factor(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  Factorization f{n, {}};
  BigInt m = abs(n);
  std::vector<BigInt> primes;
  for (std::uint32_t p : detail::small_primes()) {
    if (BigInt(p) * p > m) break;
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  if (m > 1) {
    const BigInt lim = BigInt(detail::kTrialLimit) * detail::kTrialLimit;
    if (m < lim) {
      primes.push_back(m);  // no factor <= 10^6, so prime
    } else {
      std::mt19937_64 rng(0x6d6f6e6f6c6162ull);
      detail::split(m, primes, rng);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p)
      ++f.factors.back().second;
    else
      f.factors.emplace_back(p, 1);
  }
  return f;
}

}  // namespace monolab
