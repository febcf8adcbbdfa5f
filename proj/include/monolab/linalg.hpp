#pragma once

// Exact linear algebra used by the Kostant and cohomology engines:
// saturated integer kernels, Hermite normal form, and an incremental
// sparse echelon over a field.

#include "monolab/scalar.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace monolab {

using BigVec = std::vector<BigInt>;
using BigMatrix = std::vector<BigVec>;

inline BigInt content(const BigVec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  return g;
}

/// Divides by the content and makes the first nonzero entry positive.
inline void make_primitive(BigVec& v) {
  BigInt g = content(v);
  if (g == 0) return;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

/// Returns (g, s, t) with g = s*a + t*b = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

/// Row Hermite normal form; zero rows are dropped.
inline BigMatrix hermite_normal_form(BigMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      auto [g, s, t] = extended_gcd(rows[r][c], rows[i][c]);
      const BigInt a = rows[r][c] / g, b = rows[i][c] / g;
      for (std::size_t k = c; k < n; ++k) {
        BigInt x = rows[r][k], y = rows[i][k];
        rows[r][k] = s * x + t * y;
        rows[i][k] = -b * x + a * y;
      }
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = rows[i][c] / rows[r][c];
      if (rows[i][c] - q * rows[r][c] < 0) q -= 1;  // floor division
      if (q != 0)
        for (std::size_t k = c; k < n; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Saturated Z-basis of {v in Z^n : M v = 0}, in Hermite normal form.
/// Columns of M are reduced by unimodular operations; the untouched
/// columns of the accumulated transform span the kernel lattice.
inline BigMatrix integer_kernel(const BigMatrix& m, std::size_t ncols) {
  BigMatrix a = m;
  BigMatrix u(ncols, BigVec(ncols, 0));  // u[row][col]
  for (std::size_t i = 0; i < ncols; ++i) u[i][i] = 1;
  std::size_t col = 0;
  auto combine = [&](std::size_t c1, std::size_t c2, const BigInt& p, const BigInt& q, const BigInt& r,
                     const BigInt& s) {
    // (c1, c2) <- (p c1 + q c2, r c1 + s c2)
    for (auto& row : a) {
      BigInt x = row[c1], y = row[c2];
      row[c1] = p * x + q * y;
      row[c2] = r * x + s * y;
    }
    for (auto& row : u) {
      BigInt x = row[c1], y = row[c2];
      row[c1] = p * x + q * y;
      row[c2] = r * x + s * y;
    }
  };
  for (std::size_t i = 0; i < a.size() && col < ncols; ++i) {
    for (std::size_t j = col + 1; j < ncols; ++j) {
      if (a[i][j] == 0) continue;
      if (a[i][col] == 0) {
        combine(col, j, 0, 1, 1, 0);
        continue;
      }
      auto [g, s, t] = extended_gcd(a[i][col], a[i][j]);
      const BigInt x = a[i][col] / g, y = a[i][j] / g;
      combine(col, j, s, t, -y, x);
    }
    if (a[i][col] != 0) ++col;
  }
  BigMatrix kernel;
  for (std::size_t c = col; c < ncols; ++c) {
    BigVec v(ncols);
    for (std::size_t r = 0; r < ncols; ++r) v[r] = u[r][c];
    kernel.push_back(std::move(v));
  }
  return hermite_normal_form(std::move(kernel));
}

/// Incremental echelon form over a field with sparse rows. Rows are
/// reduced against existing pivots as they arrive; rref() then
/// back-substitutes so that kernel() can be read off.
template <class Field>
class SparseEchelon {
 public:
  using value_type = typename Field::value_type;
  using Row = std::map<int, value_type>;

  SparseEchelon(Field f, int ncols) : f_(f), ncols_(ncols) {}

  /// Returns true if the row increased the rank.
  bool insert(Row row) {
    reduce(row);
    if (row.empty()) return false;
    const value_type inv = Field::inverse(row.begin()->second);
    for (auto& [c, v] : row) v = v * inv;
    pivots_.emplace(row.begin()->first, std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return ncols_; }

  /// Basis of the right kernel, one vector per free column.
  std::vector<std::vector<value_type>> kernel() {
    rref();
    std::vector<std::vector<value_type>> out;
    for (int c = 0; c < ncols_; ++c) {
      if (pivots_.count(c)) continue;
      std::vector<value_type> v(ncols_, f_.zero());
      v[c] = f_.one();
      for (const auto& [pc, row] : pivots_) {
        auto it = row.find(c);
        if (it != row.end()) v[pc] = -it->second;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void reduce(Row& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      if (Field::is_zero(it->second)) {
        it = row.erase(it);
        continue;
      }
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const int c = it->first;
      const value_type factor = it->second;
      for (const auto& [pc, pv] : p->second) {
        auto [slot, inserted] = row.try_emplace(pc, f_.zero());
        slot->second -= factor * pv;
        if (Field::is_zero(slot->second) && pc != c) row.erase(slot);
      }
      row.erase(c);
      it = row.upper_bound(c);
    }
  }

  void rref() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Row& row = it->second;
      const int lead = it->first;
      Row tail;
      for (auto e = row.upper_bound(lead); e != row.end(); ++e) tail.insert(*e);
      bool changed = false;
      for (const auto& [c, v] : tail) {
        auto p = pivots_.find(c);
        if (p == pivots_.end() || Field::is_zero(row[c])) continue;
        const value_type factor = row[c];
        for (const auto& [pc, pv] : p->second) {
          auto [slot, ins] = row.try_emplace(pc, f_.zero());
          slot->second -= factor * pv;
        }
        changed = true;
      }
      if (changed)
        for (auto e = row.begin(); e != row.end();) e = Field::is_zero(e->second) ? row.erase(e) : std::next(e);
    }
  }

  Field f_;
  int ncols_;
  std::map<int, Row> pivots_;
};

/// Rank of a dense matrix over GF(p).
inline int rank_mod_p(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  if (m.empty()) return 0;
  const std::size_t ncols = m.front().size();
  int r = 0;
  for (std::size_t c = 0; c < ncols && r < static_cast<int>(m.size()); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t inv = ModP(m[r][c], p).inverse().value();
    for (auto& x : m[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        m[i][k] = static_cast<std::uint32_t>((m[i][k] + (p - f) * m[r][k]) % p);
    }
    ++r;
  }
  return r;
}

}  // namespace monolab
