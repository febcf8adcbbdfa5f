#pragma once

// Integral Chevalley basis {x_a, y_a, h_i} of a simple Lie algebra and exact
// bracket arithmetic over ZZ, QQ and GF(p).
//
// Basis layout: x_a at the index of positive root a (0..N-1), y_a = e_{-a} at
// N + a, and the simple coroots h_i = alpha_i^vee at 2N + i.
//
// Structure constants N(a,b) follow the usual textbook convention
// [e_a, e_b] = N(a,b) e_{a+b}, [e_a, e_{-a}] = a^vee, with N = +(p+1) on
// extraspecial pairs. The public bracket() uses the opposite order,
//   bracket(u, v) = [v, u],
// so that [y_a, x_a] = a^vee and [x_a, h] = a(h) x_a as in the Magma
// normalisation of Chevalley bases.

#include "monolab/rootsys.hpp"
#include "monolab/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace monolab {

struct BracketTerm {
  int index;
  int coeff;
};

class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootDatum datum) : datum_(std::move(datum)) {
    n_ = datum_.num_positive();
    l_ = datum_.rank();
    build_root_tables();
    compute_structure_constants();
    build_bracket_table();
  }

  const RootDatum& datum() const { return datum_; }
  int dim() const { return 2 * n_ + l_; }
  int num_positive() const { return n_; }
  int rank() const { return l_; }

  int x_index(int pos_root) const { return pos_root; }
  int y_index(int pos_root) const { return n_ + pos_root; }
  int h_index(int simple) const { return 2 * n_ + simple; }
  bool is_x(int b) const { return b < n_; }
  bool is_y(int b) const { return b >= n_ && b < 2 * n_; }
  bool is_cartan(int b) const { return b >= 2 * n_; }

  std::string basis_label(int b) const {
    if (is_x(b)) return "x" + std::to_string(b + 1);
    if (is_y(b)) return "y" + std::to_string(b - n_ + 1);
    return "h" + std::to_string(b - 2 * n_ + 1);
  }

  /// Signed height of the basis vector's root; 0 on the Cartan.
  int grading(int b) const {
    if (is_cartan(b)) return 0;
    const int h = heights_[b % n_];
    return is_x(b) ? h : -h;
  }

  /// Index of root a+b (root indices 0..2N-1), or -1.
  int root_sum(int a, int b) const { return sum_[a * 2 * n_ + b]; }

  /// N(a,b) with [e_a, e_b] = N(a,b) e_{a+b}; 0 when a+b is not a root.
  int structure_constant(int a, int b) const { return nconst_[a * 2 * n_ + b]; }

  /// p = max{k >= 0 : b - k a is a root}.
  int string_length_below(int a, int b) const {
    const RootVec ra = datum_.root(a);
    RootVec rb = datum_.root(b);
    int p = 0;
    while (true) {
      for (int i = 0; i < l_; ++i) rb[i] -= ra[i];
      if (!datum_.is_root(rb)) break;
      ++p;
    }
    return p;
  }

  /// Terms of bracket(e_u, e_v) for basis indices u, v (public convention).
  std::pair<const BracketTerm*, const BracketTerm*> bracket_terms(int u, int v) const {
    const std::size_t k = static_cast<std::size_t>(u) * dim() + v;
    return {table_.data() + offsets_[k], table_.data() + offsets_[k + 1]};
  }

  /// Checks antisymmetry of N and the |N(a,b)| = p+1 rule over all root pairs.
  void verify_structure_constants() const {
    const int r = 2 * n_;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        const int s = root_sum(a, b);
        const int nab = structure_constant(a, b);
        if (s < 0) {
          if (nab != 0) throw std::logic_error("structure constant on non-root sum");
          continue;
        }
        if (nab != -structure_constant(b, a)) throw std::logic_error("N not antisymmetric");
        if (std::abs(nab) != string_length_below(a, b) + 1) throw std::logic_error("|N| != p+1");
      }
  }

  /// Nonzero bracket(e_i, e_j) for i < j as (i, j, k, c) quadruples.
  std::vector<std::tuple<int, int, int, int>> structure_table() const {
    std::vector<std::tuple<int, int, int, int>> out;
    for (int i = 0; i < dim(); ++i)
      for (int j = i + 1; j < dim(); ++j) {
        auto [b, e] = bracket_terms(i, j);
        for (auto t = b; t != e; ++t) out.emplace_back(i, j, t->index, t->coeff);
      }
    return out;
  }

 private:
  void build_root_tables() {
    const int r = 2 * n_;
    heights_.resize(n_);
    for (int i = 0; i < n_; ++i) heights_[i] = datum_.height(datum_.positive_root(i));
    norms_.resize(r);
    roots_.resize(r);
    for (int a = 0; a < r; ++a) {
      roots_[a] = datum_.root(a);
      norms_[a] = datum_.norm2(roots_[a]);
    }
    sum_.assign(static_cast<std::size_t>(r) * r, -1);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        RootVec s = roots_[a];
        for (int i = 0; i < l_; ++i) s[i] += roots_[b][i];
        if (auto idx = datum_.find_root(s)) sum_[a * r + b] = *idx;
      }
    // Extraspecial pair of each non-simple positive root xi: the smallest
    // gamma (in root order) with xi - gamma a positive root.
    extraspecial_.assign(n_, {-1, -1});
    for (int g = 0; g < n_; ++g)
      for (int d = 0; d < n_; ++d) {
        const int s = sum_[g * r + d];
        if (s >= 0 && s < n_ && extraspecial_[s].first < 0) extraspecial_[s] = {g, d};
      }
  }

  int npos(int a, int b) {
    const int r = 2 * n_;
    int& slot = nconst_[a * r + b];
    if (slot != 0) return slot;
    const int xi = sum_[a * r + b];
    const auto [g, d] = extraspecial_[xi];
    const int pgd = string_length_below(g, d) + 1;
    if (a == g) return slot = pgd;
    if (b == g) return slot = -pgd;
    // Four-root identity with (a, b, -g, -d); only terms whose pair sums are
    // roots contribute.
    std::int64_t num = 0, den = 1;
    auto add = [&](std::int64_t t_num, std::int64_t t_den) {
      num = num * t_den + t_num * den;
      den *= t_den;
      const auto gg = std::gcd(num, den);
      if (gg) {
        num /= gg;
        den /= gg;
      }
    };
    const int mg = neg(g), md = neg(d);
    const int bmg = sum_[b * r + mg];
    if (bmg >= 0) add(std::int64_t(nval(b, mg)) * nval(a, md), norms_[bmg]);
    const int amg = sum_[a * r + mg];
    if (amg >= 0) add(std::int64_t(nval(mg, a)) * nval(b, md), norms_[amg]);
    num *= norms_[xi];
    den *= pgd;
    if (num % den != 0) throw std::logic_error("structure constants: non-integral value");
    return slot = static_cast<int>(num / den);
  }

  int neg(int a) const { return a < n_ ? a + n_ : a - n_; }

  /// N(a,b) for arbitrary roots with a+b a root.
  int nval(int a, int b) {
    const bool pa = a < n_, pb = b < n_;
    if (pa && pb) return npos(a, b);
    if (!pa && !pb) return -npos(neg(a), neg(b));
    const int c = neg(sum_[a * 2 * n_ + b]);  // a + b + c = 0
    const bool pc = c < n_;
    std::int64_t num;
    std::int64_t den;
    if (pc == pb) {
      num = std::int64_t(norms_[c]) * same_sign(b, c);
      den = norms_[a];
    } else {
      num = std::int64_t(norms_[c]) * same_sign(c, a);
      den = norms_[b];
    }
    if (num % den != 0) throw std::logic_error("structure constants: non-integral ratio");
    return static_cast<int>(num / den);
  }

  int same_sign(int a, int b) { return a < n_ ? npos(a, b) : -npos(neg(a), neg(b)); }

  void compute_structure_constants() {
    const int r = 2 * n_;
    nconst_.assign(static_cast<std::size_t>(r) * r, 0);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        if (sum_[a * r + b] >= 0) nconst_[a * r + b] = nval(a, b);
  }

  std::vector<BracketTerm> std_bracket(int u, int v) const {
    std::vector<BracketTerm> out;
    const int r = 2 * n_;
    if (is_cartan(u) && is_cartan(v)) return out;
    if (is_cartan(u) || is_cartan(v)) {
      const bool flip = is_cartan(v);
      const int h = (flip ? v : u) - r, e = flip ? u : v;
      const int w = datum_.pairing_with_simple_coroot(roots_[e], h);
      if (w != 0) out.push_back({e, flip ? -w : w});
      return out;
    }
    if (v == neg(u)) {
      const bool pos = u < n_;
      const RootVec cr = datum_.coroot(datum_.positive_root(pos ? u : v));
      for (int i = 0; i < l_; ++i)
        if (cr[i] != 0) out.push_back({r + i, pos ? cr[i] : -cr[i]});
      return out;
    }
    const int s = sum_[u * r + v];
    if (s >= 0) out.push_back({s, nconst_[u * r + v]});
    return out;
  }

  void build_bracket_table() {
    const int d = dim();
    offsets_.assign(static_cast<std::size_t>(d) * d + 1, 0);
    for (int u = 0; u < d; ++u)
      for (int v = 0; v < d; ++v) {
        offsets_[static_cast<std::size_t>(u) * d + v] = static_cast<std::uint32_t>(table_.size());
        for (const auto& t : std_bracket(v, u)) table_.push_back(t);
      }
    offsets_.back() = static_cast<std::uint32_t>(table_.size());
  }

  RootDatum datum_;
  int n_ = 0;
  int l_ = 0;
  std::vector<int> heights_;
  std::vector<int> norms_;
  std::vector<RootVec> roots_;
  std::vector<int> sum_;
  std::vector<std::pair<int, int>> extraspecial_;
  std::vector<int> nconst_;
  std::vector<BracketTerm> table_;
  std::vector<std::uint32_t> offsets_;
};

using AlgebraPtr = std::shared_ptr<const ChevalleyAlgebra>;

inline AlgebraPtr build_chevalley_algebra(const RootDatum& d) { return std::make_shared<const ChevalleyAlgebra>(d); }
inline AlgebraPtr build_chevalley_algebra(const SimpleType& t) { return build_chevalley_algebra(RootDatum(t)); }

/// Sparse element of a Chevalley algebra over an exact ring; zero
/// coefficients are never stored.
template <class Ring>
class LieElement {
 public:
  using value_type = typename Ring::value_type;

  LieElement(AlgebraPtr alg, Ring ring) : alg_(std::move(alg)), ring_(ring) {}

  static LieElement basis(AlgebraPtr alg, Ring ring, int index, const BigInt& c = 1) {
    LieElement e(std::move(alg), ring);
    e.add_term(index, ring.from_integer(c));
    return e;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const Ring& ring() const { return ring_; }
  const std::map<int, value_type>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  value_type coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? ring_.zero() : it->second;
  }

  void add_term(int index, const value_type& c) {
    if (index < 0 || index >= alg_->dim()) throw std::out_of_range("LieElement: basis index out of range");
    if (Ring::is_zero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (Ring::is_zero(it->second)) coeffs_.erase(it);
    }
  }

  LieElement& operator+=(const LieElement& o) {
    require_compatible(o);
    for (const auto& [i, c] : o.coeffs_) add_term(i, c);
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    require_compatible(o);
    for (const auto& [i, c] : o.coeffs_) add_term(i, -c);
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }

  LieElement scaled(const value_type& s) const {
    LieElement out(alg_, ring_);
    if (Ring::is_zero(s)) return out;
    for (const auto& [i, c] : coeffs_) out.add_term(i, c * s);
    return out;
  }

  bool operator==(const LieElement& o) const {
    return alg_ == o.alg_ && ring_ == o.ring_ && coeffs_ == o.coeffs_;
  }

  void require_compatible(const LieElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("LieElement: operands from different algebras");
    if (!(ring_ == o.ring_)) throw std::invalid_argument("LieElement: operands over different rings");
  }

 private:
  AlgebraPtr alg_;
  Ring ring_;
  std::map<int, value_type> coeffs_;
};

template <class Ring>
LieElement<Ring> bracket(const LieElement<Ring>& a, const LieElement<Ring>& b) {
  a.require_compatible(b);
  const auto& alg = *a.algebra();
  const Ring& ring = a.ring();
  LieElement<Ring> out(a.algebra(), ring);
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      auto [beg, end] = alg.bracket_terms(i, j);
      if (beg == end) continue;
      const auto cij = ci * cj;
      for (auto t = beg; t != end; ++t) out.add_term(t->index, cij * ring.from_integer(t->coeff));
    }
  return out;
}

/// ad(y)^n (v).
template <class Ring>
LieElement<Ring> ad_power(const LieElement<Ring>& y, int n, LieElement<Ring> v) {
  if (n < 0) throw std::invalid_argument("ad_power: negative exponent");
  for (int k = 0; k < n && !v.is_zero(); ++k) v = bracket(y, v);
  return v;
}

template <class To, class From>
LieElement<To> change_ring(const LieElement<From>& a, To ring) {
  LieElement<To> out(a.algebra(), ring);
  for (const auto& [i, c] : a.terms()) {
    if constexpr (std::is_same_v<typename From::value_type, BigInt>) {
      out.add_term(i, ring.from_integer(c));
    } else {
      static_assert(std::is_same_v<typename From::value_type, typename To::value_type>,
                    "change_ring: unsupported conversion");
      out.add_term(i, c);
    }
  }
  return out;
}

/// Coefficientwise reduction of an integral element modulo the prime ell.
inline LieElement<PrimeField> base_change(const LieElement<IntegerRing>& a, std::uint64_t ell) {
  return change_ring(a, prime_field(ell));
}

inline LieElement<RationalField> to_rational(const LieElement<IntegerRing>& a) {
  LieElement<RationalField> out(a.algebra(), RationalField{});
  for (const auto& [i, c] : a.terms()) out.add_term(i, Rational(c));
  return out;
}

/// Cartan part of a in the dual basis h[j] (alpha_i(h[j]) = delta_ij):
/// the j-th entry is alpha_j evaluated on the Cartan component.
template <class Ring>
std::vector<typename Ring::value_type> cartan_dual_coordinates(const LieElement<Ring>& a) {
  const auto& alg = *a.algebra();
  const auto& cm = alg.datum().cartan();
  const int l = alg.rank();
  std::vector<typename Ring::value_type> out(l, a.ring().zero());
  for (const auto& [b, c] : a.terms()) {
    if (!alg.is_cartan(b)) continue;
    const int k = b - 2 * alg.num_positive();
    for (int j = 0; j < l; ++j)
      if (cm[k][j] != 0) out[j] += c * a.ring().from_integer(cm[k][j]);
  }
  return out;
}

/// Jacobi identity on three basis vectors, in machine integers.
inline bool jacobi_holds(const ChevalleyAlgebra& alg, int u, int v, int w) {
  std::map<int, std::int64_t> acc;
  auto accumulate = [&](int a, int b, int c) {
    auto [b1, e1] = alg.bracket_terms(a, b);
    for (auto t = b1; t != e1; ++t) {
      auto [b2, e2] = alg.bracket_terms(t->index, c);
      for (auto s = b2; s != e2; ++s) acc[s->index] += std::int64_t(t->coeff) * s->coeff;
    }
  };
  accumulate(u, v, w);
  accumulate(v, w, u);
  accumulate(w, u, v);
  for (const auto& [i, c] : acc)
    if (c != 0) return false;
  return true;
}

}  // namespace monolab
