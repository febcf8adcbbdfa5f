#pragma once

// Exact scalar rings: big integers, big rationals, and prime fields of
// machine width. A ring descriptor (IntegerRing, RationalField, PrimeField)
// travels with every LieElement so that mixed-ring arithmetic is caught
// either at compile time (different value types) or at run time
// (different moduli).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monolab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& n) { return n.str(); }

/// Residue modulo a prime p < 2^31. The modulus is carried by the value so
/// that operands from different fields can be rejected.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("ModP: modulus must be >= 2");
    auto r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static ModP from_integer(const BigInt& n, std::uint32_t p) {
    BigInt r = n % p;
    if (r < 0) r += p;
    return ModP(static_cast<std::int64_t>(r), p);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator+(const ModP& o) const {
    check(o);
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    if (s >= p_) s -= p_;
    return raw(static_cast<std::uint32_t>(s), p_);
  }
  ModP operator-(const ModP& o) const {
    check(o);
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_), p_);
  }
  ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP operator*(const ModP& o) const {
    check(o);
    return raw(static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_), p_);
  }
  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
    return pow(p_ - 2);
  }
  ModP operator/(const ModP& o) const { return *this * o.inverse(); }
  ModP pow(std::uint64_t e) const {
    ModP base = *this, acc = raw(1 % p_, p_);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }

  bool operator==(const ModP& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const ModP& o) const { return !(*this == o); }

 private:
  static ModP raw(std::uint32_t v, std::uint32_t p) {
    ModP m;
    m.v_ = v;
    m.p_ = p;
    return m;
  }
  void check(const ModP& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ModP: mixed moduli");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

struct IntegerRing {
  using value_type = BigInt;
  static constexpr bool is_field = false;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const BigInt& n) const { return n; }
  static bool is_zero(const value_type& v) { return v == 0; }
  std::uint32_t characteristic() const { return 0; }
  bool operator==(const IntegerRing&) const { return true; }
  std::string name() const { return "ZZ"; }
};

struct RationalField {
  using value_type = Rational;
  static constexpr bool is_field = true;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const BigInt& n) const { return Rational(n); }
  static bool is_zero(const value_type& v) { return v == 0; }
  static value_type inverse(const value_type& v) { return 1 / v; }
  std::uint32_t characteristic() const { return 0; }
  bool operator==(const RationalField&) const { return true; }
  std::string name() const { return "QQ"; }
};

struct PrimeField {
  using value_type = ModP;
  static constexpr bool is_field = true;
  std::uint32_t p = 2;

  value_type zero() const { return ModP(0, p); }
  value_type one() const { return ModP(1, p); }
  value_type from_integer(const BigInt& n) const { return ModP::from_integer(n, p); }
  static bool is_zero(const value_type& v) { return v.is_zero(); }
  static value_type inverse(const value_type& v) { return v.inverse(); }
  std::uint32_t characteristic() const { return p; }
  bool operator==(const PrimeField& o) const { return p == o.p; }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

/// Deterministic primality for 64-bit inputs (Miller-Rabin with the
/// first twelve prime bases, proven sufficient below 3.3e24).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  using u128 = unsigned __int128;
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return std::uint64_t(u128(a) * b % n); };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline PrimeField prime_field(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime_u64(p))
    throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not a prime below 2^31");
  return PrimeField{static_cast<std::uint32_t>(p)};
}

/// Smallest prime >= n.
inline std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime_u64(n)) ++n;
  return n;
}

}  // namespace monolab
