#pragma once

// Dimension bookkeeping for Selmer groups: local tangent-space catalog,
// Wiles's formula, the oddness balance at real places, the L-group variant
// of the Euler-characteristic formula, and the element checks used to pick
// auxiliary Frobenius elements.

#include "monolab/fixtures.hpp"
#include "monolab/rootsys.hpp"
#include "monolab/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monolab {

enum class LocalKind { ordinary, ramakrishna, steinberg, minimal, archimedean, unramified, custom };

inline const char* to_string(LocalKind k) {
  switch (k) {
    case LocalKind::ordinary: return "ordinary";
    case LocalKind::ramakrishna: return "ramakrishna";
    case LocalKind::steinberg: return "steinberg";
    case LocalKind::minimal: return "minimal";
    case LocalKind::archimedean: return "archimedean";
    case LocalKind::unramified: return "unramified";
    case LocalKind::custom: return "custom";
  }
  return "?";
}

inline LocalKind parse_local_kind(const std::string& s) {
  for (auto k : {LocalKind::ordinary, LocalKind::ramakrishna, LocalKind::steinberg, LocalKind::minimal,
                 LocalKind::archimedean, LocalKind::unramified, LocalKind::custom})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown local condition kind '" + s + "'");
}

struct LocalCondition {
  LocalKind kind = LocalKind::minimal;
  std::int64_t h0_local = 0;
  std::int64_t field_degree = 0;  // [F_v : Q_ell], used by ordinary
  std::optional<std::int64_t> custom_dim;
};

struct SelmerLedger {
  std::int64_t h0_global = 0;
  std::int64_t h0_global_twist = 0;  // invariants of g(1)
  std::int64_t dim_n = 0;
  std::int64_t totally_real_degree = 0;
  std::vector<std::int64_t> archimedean_fixed_dims;
  std::vector<LocalCondition> locals;
};

/// Tangent-space dimension dim L_v of a local condition.
inline std::int64_t local_dim(const LocalCondition& c, std::int64_t dim_n) {
  if (c.h0_local < 0 || c.field_degree < 0 || dim_n < 0)
    throw std::invalid_argument("local_dim: negative input");
  if (c.custom_dim.has_value() != (c.kind == LocalKind::custom))
    throw std::invalid_argument("local_dim: custom_dim is required exactly for kind=custom");
  switch (c.kind) {
    case LocalKind::ordinary: return c.h0_local + c.field_degree * dim_n;
    case LocalKind::ramakrishna:
    case LocalKind::steinberg:
    case LocalKind::minimal:
    case LocalKind::unramified: return c.h0_local;
    case LocalKind::archimedean: return 0;
    case LocalKind::custom:
      if (*c.custom_dim < 0) throw std::invalid_argument("local_dim: negative custom_dim");
      return *c.custom_dim;
  }
  throw std::logic_error("local_dim: unreachable");
}

/// h^0 - h^0(1) + sum over all places (archimedean included) of dim L_v - h^0_v.
inline std::int64_t wiles_difference(const SelmerLedger& l) {
  std::int64_t s = l.h0_global - l.h0_global_twist;
  for (const auto& c : l.locals) s += local_dim(c, l.dim_n) - c.h0_local;
  return s;
}

/// Sum over real places of h^0_v minus [F:Q] dim n; zero exactly when every
/// complex conjugation acts as a split Cartan involution.
inline std::int64_t oddness_deficit(const SelmerLedger& l) {
  std::int64_t s = -l.totally_real_degree * l.dim_n;
  for (auto d : l.archimedean_fixed_dims) s += d;
  return s;
}

/// h^0 - h^0(1) - sum over real places of h^0_v + sum over finite places of
/// dim L_v - h^0_v. Archimedean entries in locals are skipped; their
/// contribution is the explicit subtraction term.
inline std::int64_t lgroup_euler_difference(const SelmerLedger& l) {
  std::int64_t s = l.h0_global - l.h0_global_twist;
  for (auto d : l.archimedean_fixed_dims) s -= d;
  for (const auto& c : l.locals)
    if (c.kind != LocalKind::archimedean) s += local_dim(c, l.dim_n) - c.h0_local;
  return s;
}

/// Totally real ledger: ordinary at the places above ell (total degree
/// [F:Q]), one archimedean entry per real place with fixed dim = dim n,
/// and the given balanced finite places.
inline SelmerLedger balanced_ledger(const SimpleType& t, int degree, std::vector<LocalCondition> extra = {}) {
  const RootDatum d(t);
  SelmerLedger l;
  l.dim_n = d.num_positive();
  l.totally_real_degree = degree;
  l.archimedean_fixed_dims.assign(degree, l.dim_n);
  l.locals.push_back({LocalKind::ordinary, 0, degree, std::nullopt});
  for (int v = 0; v < degree; ++v) l.locals.push_back({LocalKind::archimedean, l.dim_n, 0, std::nullopt});
  for (auto& c : extra) l.locals.push_back(c);
  return l;
}

/// Fixed-space dimension of a split Cartan involution: (dim g - rank) / 2.
inline std::int64_t split_cartan_fixed_dim(const SimpleType& t) {
  const RootDatum d(t);
  return (d.dim() - d.rank()) / 2;
}

namespace detail {

inline std::uint64_t unit_mod(std::int64_t a, std::uint32_t ell) {
  prime_field(ell);
  const std::int64_t r = ((a % static_cast<std::int64_t>(ell)) + ell) % ell;
  if (r == 0) throw std::invalid_argument("expected a unit mod " + std::to_string(ell));
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// 2 rho^vee(a) is regular iff a^{2k} != 1 for every root height k in 1..h-1.
inline bool regular_2rho_check(std::int64_t a, std::uint32_t ell, const SimpleType& t) {
  const std::uint64_t u = detail::unit_mod(a, ell);
  const int h = RootDatum(t).coxeter_number();
  const std::uint64_t sq = u * u % ell;
  std::uint64_t p = 1;
  for (int k = 1; k <= h - 1; ++k) {
    p = p * sq % ell;
    if (p == 1) return false;
  }
  return true;
}

/// Whether {a^{2i}} and {a^{2i+2}}, i in [-m, m], differ as multisets.
inline bool eigenvalue_multiset_distinct(std::int64_t a, std::uint32_t ell, int m) {
  if (m < 0) throw std::invalid_argument("eigenvalue_multiset_distinct: negative m");
  const std::uint64_t u = detail::unit_mod(a, ell);
  const std::uint64_t inv = ModP(static_cast<std::int64_t>(u), ell).inverse().value();
  auto power = [ell](std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r = r * b % ell;
    return r;
  };
  std::vector<std::uint64_t> lhs, rhs;
  for (int i = -m; i <= m; ++i) {
    const std::uint64_t b = i < 0 ? inv : u;
    lhs.push_back(power(b, 2 * std::abs(i)));
    const int e = 2 * i + 2;
    rhs.push_back(power(e < 0 ? inv : u, std::abs(e)));
  }
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs != rhs;
}

/// Order of the center of the simply connected group of this type.
inline int center_order(const SimpleType& t) {
  switch (t.family()) {
    case 'A': return t.rank() + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return t.rank() == 6 ? 3 : t.rank() == 7 ? 2 : 1;
    default: return 1;
  }
}

struct LiftingBounds {
  SimpleType type;
  int center_order = 1;
  /// The big-image theorem needs ell - 1 > maximal_image_bound.
  int maximal_image_bound = 0;
  /// The principal-sl2 theorem needs ell > principal_sl2_bound.
  int principal_sl2_bound = 0;
  std::vector<std::uint64_t> e8_exclusions;  // as published alongside the theorem
  std::optional<std::uint64_t> e8_flagged;   // published value the scan does not reproduce
  std::optional<std::uint64_t> e8_computed;  // the value the scan produces instead

  bool maximal_image_ok(std::uint64_t ell) const { return ell - 1 > static_cast<std::uint64_t>(maximal_image_bound); }
  bool principal_sl2_ok(std::uint64_t ell) const {
    if (ell <= static_cast<std::uint64_t>(principal_sl2_bound)) return false;
    if (e8_computed && ell == *e8_computed) return false;
    return std::find(e8_exclusions.begin(), e8_exclusions.end(), ell) == e8_exclusions.end();
  }
};

inline LiftingBounds lifting_prime_bounds(const SimpleType& t) {
  const int h = RootDatum(t).coxeter_number();
  LiftingBounds b{t, center_order(t), 0, 4 * h - 1, {}, std::nullopt, std::nullopt};
  const int z = b.center_order;
  b.maximal_image_bound = std::max(8 * z, z % 2 == 0 ? (h - 1) * z : (2 * h - 2) * z);
  if (t == SimpleType('E', 8)) {
    b.e8_exclusions = fixtures::e8_theorem_exclusions();
    b.e8_flagged = 367;
    b.e8_computed = 397;
  }
  return b;
}

}  // namespace monolab
