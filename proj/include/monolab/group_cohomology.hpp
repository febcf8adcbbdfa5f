#pragma once

// H^0 and H^1 of finite matrix groups over GF(ell).
//
// A group is closed breadth-first from its generators, which fixes a
// spanning tree of the Cayley graph. A 1-cocycle is determined by its values
// on the generators, z = (phi(s_1), ..., phi(s_k)); along tree edges
// phi(g s) = phi(g) + g.phi(s) expresses every phi(g) as a linear function
// E_g z, and every non-tree edge (g, s) -> t contributes the constraint
// E_g + g.[block s] - E_t = 0. Z^1 is the null space of those constraints.

#include "monolab/rootsys.hpp"
#include "monolab/scalar.hpp"

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace monolab {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row-major square matrix over GF(ell).
using FpMatrix = std::vector<std::uint32_t>;

namespace fp {

inline FpMatrix identity(int n) {
  FpMatrix m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

inline FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, int n, std::uint32_t p) {
  FpMatrix c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::uint64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] = static_cast<std::uint32_t>((c[i * n + j] + aik * b[k * n + j]) % p);
    }
  return c;
}

inline std::uint32_t determinant(FpMatrix m, int n, std::uint32_t p) {
  std::uint64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(m[piv * n + k], m[c * n + k]);
      det = (p - det) % p;
    }
    det = det * m[c * n + c] % p;
    const std::uint64_t inv = ModP(m[c * n + c], p).inverse().value();
    for (int r = c + 1; r < n; ++r) {
      const std::uint64_t f = m[r * n + c] * inv % p;
      if (f == 0) continue;
      for (int k = c; k < n; ++k) m[r * n + k] = static_cast<std::uint32_t>((m[r * n + k] + (p - f) * m[c * n + k]) % p);
    }
  }
  return static_cast<std::uint32_t>(det);
}

inline std::uint32_t pow_mod(std::uint64_t b, std::int64_t e, std::uint32_t p) {
  if (e < 0) {
    b = ModP(static_cast<std::int64_t>(b), p).inverse().value();
    e = -e;
  }
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

struct MatrixHash {
  std::size_t operator()(const FpMatrix& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

/// Streaming row echelon over GF(p) with dense rows of fixed width.
class DenseEchelon {
 public:
  DenseEchelon(std::uint32_t p, int ncols)
      : p_(p), n_(ncols), pivots_(static_cast<std::size_t>(ncols) * ncols, 0), has_(ncols, 0) {}

  /// Reduces the row in place; returns true if it was independent.
  bool insert(std::vector<std::uint32_t>& row) {
    int lead = -1;
    for (int c = 0; c < n_; ++c) {
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      if (!has_[c]) {
        if (lead < 0) lead = c;
        continue;
      }
      const std::uint32_t* piv = &pivots_[static_cast<std::size_t>(c) * n_];
      const std::uint64_t nf = p_ - f;
      for (int k = c; k < n_; ++k)
        if (piv[k]) row[k] = static_cast<std::uint32_t>((row[k] + nf * piv[k]) % p_);
    }
    if (lead < 0) return false;
    // Entries left of lead are zero; the first nonzero may sit after a reduced column.
    lead = -1;
    for (int c = 0; c < n_; ++c)
      if (row[c]) {
        lead = c;
        break;
      }
    if (lead < 0) return false;
    const std::uint64_t inv = ModP(row[lead], p_).inverse().value();
    std::uint32_t* dst = &pivots_[static_cast<std::size_t>(lead) * n_];
    for (int k = 0; k < n_; ++k) dst[k] = static_cast<std::uint32_t>(row[k] * inv % p_);
    has_[lead] = 1;
    ++rank_;
    return true;
  }

  int rank() const { return rank_; }

 private:
  std::uint32_t p_;
  int n_;
  std::vector<std::uint32_t> pivots_;
  std::vector<char> has_;
  int rank_ = 0;
};

inline int rank_of_rows(const std::vector<std::vector<std::uint32_t>>& rows, int ncols, std::uint32_t p) {
  DenseEchelon e(p, ncols);
  for (auto row : rows) e.insert(row);
  return e.rank();
}

}  // namespace fp

struct FiniteMatrixGroup {
  std::uint32_t ell = 2;
  int degree = 0;
  std::vector<FpMatrix> generators;
  std::vector<FpMatrix> elements;     // discovery order; elements[0] is the identity
  std::vector<std::int32_t> cayley;   // cayley[g * ngen + s] = index of g * s
  std::vector<std::int32_t> parent;   // BFS tree, -1 at the identity
  std::vector<std::int32_t> parent_gen;
  std::unordered_map<FpMatrix, std::int32_t, fp::MatrixHash> index;

  std::size_t order() const { return elements.size(); }
  int num_generators() const { return static_cast<int>(generators.size()); }
  std::int32_t product(std::size_t g, int s) const { return cayley[g * generators.size() + s]; }
  std::optional<std::int32_t> find(const FpMatrix& m) const {
    auto it = index.find(m);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

/// Breadth-first closure of the generated group; throws ResourceError if the
/// order would exceed cap.
inline FiniteMatrixGroup close_group(const std::vector<FpMatrix>& generators, int degree, std::uint32_t ell,
                                     std::size_t cap = 1u << 22) {
  prime_field(ell);
  FiniteMatrixGroup g;
  g.ell = ell;
  g.degree = degree;
  for (const auto& m : generators) {
    if (m.size() != static_cast<std::size_t>(degree) * degree)
      throw std::invalid_argument("close_group: generator has the wrong shape");
    FpMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] % ell;
    if (fp::determinant(r, degree, ell) == 0) throw std::invalid_argument("close_group: generator is singular");
    g.generators.push_back(std::move(r));
  }
  const int k = g.num_generators();
  g.elements.push_back(fp::identity(degree));
  g.index.emplace(g.elements[0], 0);
  g.parent.push_back(-1);
  g.parent_gen.push_back(-1);
  for (std::size_t cur = 0; cur < g.elements.size(); ++cur) {
    for (int s = 0; s < k; ++s) {
      FpMatrix prod = fp::multiply(g.elements[cur], g.generators[s], degree, ell);
      auto [it, inserted] = g.index.try_emplace(std::move(prod), static_cast<std::int32_t>(g.elements.size()));
      if (inserted) {
        if (g.elements.size() >= cap)
          throw ResourceError("close_group: group order exceeds cap " + std::to_string(cap));
        g.elements.push_back(it->first);
        g.parent.push_back(static_cast<std::int32_t>(cur));
        g.parent_gen.push_back(s);
      }
      g.cayley.push_back(it->second);
    }
  }
  return g;
}

/// T = [[1,1],[0,1]] and S = [[0,-1],[1,0]], which generate SL2(F_ell).
inline std::vector<FpMatrix> sl2_standard_generators(std::uint32_t ell) {
  return {FpMatrix{1, 1, 0, 1}, FpMatrix{0, ell - 1, 1, 0}};
}

inline FiniteMatrixGroup sl2_group(std::uint32_t ell, std::size_t cap = 1u << 22) {
  return close_group(sl2_standard_generators(ell), 2, ell, cap);
}

struct ModuleAction {
  std::uint32_t ell = 2;
  int dim = 0;
  std::vector<FpMatrix> generator_action;
  std::string description;
  /// Action of an arbitrary group element, when a closed formula exists.
  std::function<FpMatrix(const FpMatrix&)> element_action;
};

/// Matrix of g = [[a,b],[c,d]] on degree-r binary forms (basis x^{r-i} y^i,
/// x -> a x + c y, y -> b x + d y), times det(g)^{-twist}.
inline FpMatrix sym_power_matrix(const FpMatrix& g, int r, int twist, std::uint32_t p) {
  const std::uint64_t a = g[0], b = g[1], c = g[2], d = g[3];
  auto binom_power = [&](std::uint64_t u, std::uint64_t v, int k) {
    // (u x + v y)^k, indexed by the power of y.
    std::vector<std::uint64_t> poly{1};
    for (int t = 0; t < k; ++t) {
      std::vector<std::uint64_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] = (next[i] + poly[i] * u) % p;
        next[i + 1] = (next[i + 1] + poly[i] * v) % p;
      }
      poly.swap(next);
    }
    return poly;
  };
  const int n = r + 1;
  FpMatrix m(static_cast<std::size_t>(n) * n, 0);
  const std::uint64_t det = (a * d % p + p - b * c % p) % p;
  const std::uint64_t scale = fp::pow_mod(det, -static_cast<std::int64_t>(twist), p);
  for (int j = 0; j < n; ++j) {
    const auto left = binom_power(a, c, r - j), right = binom_power(b, d, j);
    for (std::size_t u = 0; u < left.size(); ++u) {
      if (!left[u]) continue;
      for (std::size_t v = 0; v < right.size(); ++v) {
        const std::size_t i = u + v;
        m[i * n + j] = static_cast<std::uint32_t>((m[i * n + j] + left[u] * right[v] % p * scale) % p);
      }
    }
  }
  return m;
}

/// Sym^r(F_ell^2) (x) det^{-twist} restricted to a group of 2x2 matrices.
/// Degrees r >= ell lie outside the irreducible range and need allow_large_r.
inline ModuleAction sym_module(const FiniteMatrixGroup& g, int r, int twist, bool allow_large_r = false) {
  if (g.degree != 2) throw std::invalid_argument("sym_module: group is not a group of 2x2 matrices");
  if (r < 0) throw std::invalid_argument("sym_module: negative degree");
  if (static_cast<std::uint32_t>(r) >= g.ell && !allow_large_r)
    throw std::invalid_argument("sym_module: r = " + std::to_string(r) + " >= ell = " + std::to_string(g.ell) +
                                " (pass the override to explore reducible cases)");
  ModuleAction m;
  m.ell = g.ell;
  m.dim = r + 1;
  m.description = "Sym^" + std::to_string(r) + " (x) det^" + std::to_string(-twist);
  const std::uint32_t p = g.ell;
  for (const auto& s : g.generators) m.generator_action.push_back(sym_power_matrix(s, r, twist, p));
  m.element_action = [r, twist, p](const FpMatrix& x) { return sym_power_matrix(x, r, twist, p); };
  return m;
}

inline ModuleAction trivial_module(const FiniteMatrixGroup& g, int dim = 1) {
  ModuleAction m;
  m.ell = g.ell;
  m.dim = dim;
  m.description = "trivial^" + std::to_string(dim);
  for (std::size_t i = 0; i < g.generators.size(); ++i) m.generator_action.push_back(fp::identity(dim));
  m.element_action = [dim](const FpMatrix&) { return fp::identity(dim); };
  return m;
}

inline ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b) {
  if (a.ell != b.ell || a.generator_action.size() != b.generator_action.size())
    throw std::invalid_argument("direct_sum: modules for different groups");
  const int n = a.dim + b.dim;
  auto block = [n, da = a.dim, db = b.dim](const FpMatrix& x, const FpMatrix& y) {
    FpMatrix m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) m[i * n + j] = x[i * da + j];
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < db; ++j) m[(da + i) * n + da + j] = y[i * db + j];
    return m;
  };
  ModuleAction m;
  m.ell = a.ell;
  m.dim = n;
  m.description = a.description + " + " + b.description;
  for (std::size_t s = 0; s < a.generator_action.size(); ++s)
    m.generator_action.push_back(block(a.generator_action[s], b.generator_action[s]));
  if (a.element_action && b.element_action)
    m.element_action = [block, fa = a.element_action, fb = b.element_action](const FpMatrix& x) {
      return block(fa(x), fb(x));
    };
  return m;
}

struct CohomologyReport {
  int h0 = 0;
  int dim_Z1 = 0;
  int dim_B1 = 0;
  int h1 = 0;
};

struct SolverOptions {
  /// Bytes allowed for the per-element action and cocycle expression tables.
  std::size_t memory_budget = std::size_t(2) << 30;
  /// Stop once the constraint rank forces Z^1 = B^1 (always exact).
  bool early_exit = true;
};

/// Parses a byte count with an optional K/M/G suffix ("512M", "2G", "1048576").
inline std::size_t parse_byte_size(const std::string& text) {
  std::string s = text;
  std::size_t mult = 1;
  if (!s.empty()) switch (std::toupper(static_cast<unsigned char>(s.back()))) {
      case 'K': mult = std::size_t(1) << 10; s.pop_back(); break;
      case 'M': mult = std::size_t(1) << 20; s.pop_back(); break;
      case 'G': mult = std::size_t(1) << 30; s.pop_back(); break;
      default: break;
    }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("cannot parse byte size '" + text + "'");
  return static_cast<std::size_t>(std::stoull(s)) * mult;
}

/// MONOLAB_MEMORY_BUDGET if set, else the fallback.
inline std::size_t memory_budget_from_env(std::size_t fallback = std::size_t(2) << 30) {
  const char* v = std::getenv("MONOLAB_MEMORY_BUDGET");
  if (!v || !*v) return fallback;
  return parse_byte_size(v);
}

/// Dimension of the subspace fixed by every generator.
inline int h0(const FiniteMatrixGroup& g, const ModuleAction& m) {
  const int n = m.dim;
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& a : m.generator_action)
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint32_t> row(a.begin() + i * n, a.begin() + (i + 1) * n);
      row[i] = (row[i] + g.ell - 1) % g.ell;
      rows.push_back(std::move(row));
    }
  return n - fp::rank_of_rows(rows, n, g.ell);
}

namespace detail {

inline void check_module(const FiniteMatrixGroup& g, const ModuleAction& m) {
  if (m.ell != g.ell || m.generator_action.size() != g.generators.size())
    throw std::invalid_argument("cohomology: module does not match the group");
}

}  // namespace detail

/// H^1 by propagation of cocycle expressions along the BFS spanning tree.
inline CohomologyReport h1(const FiniteMatrixGroup& g, const ModuleAction& m, const SolverOptions& opt = {}) {
  detail::check_module(g, m);
  const std::uint32_t p = g.ell;
  const int n = m.dim;
  const int k = g.num_generators();
  const int width = k * n;
  CohomologyReport rep;
  rep.h0 = h0(g, m);
  rep.dim_B1 = n - rep.h0;

  const std::size_t order = g.order();
  const std::size_t per_elem = static_cast<std::size_t>(n) * n + static_cast<std::size_t>(n) * width;
  const std::size_t bytes = order * per_elem * sizeof(std::uint32_t);
  if (bytes > opt.memory_budget)
    throw ResourceError("h1: needs " + std::to_string(bytes >> 20) + " MiB, budget is " +
                        std::to_string(opt.memory_budget >> 20) + " MiB");

  std::vector<std::uint32_t> rho(order * n * n, 0), expr(order * n * width, 0);
  std::vector<char> ready(order, 0);
  const FpMatrix id = fp::identity(n);
  std::copy(id.begin(), id.end(), rho.begin());
  ready[0] = 1;

  fp::DenseEchelon ech(p, width);
  const int target = width - rep.dim_B1;  // rank at which Z^1 = B^1 is forced
  std::vector<std::uint32_t> row(width);
  bool done = opt.early_exit && target == 0;

  for (std::size_t e = 0; e < order && !done; ++e) {
    const std::uint32_t* re = &rho[e * n * n];
    const std::uint32_t* ee = &expr[e * n * width];
    for (int s = 0; s < k && !done; ++s) {
      const std::size_t t = static_cast<std::size_t>(g.product(e, s));
      if (!ready[t] && g.parent[t] == static_cast<std::int32_t>(e) && g.parent_gen[t] == s) {
        // Tree edge: rho(t) = rho(e) rho(s), E_t = E_e + rho(e) in block s.
        const auto& as = m.generator_action[s];
        std::uint32_t* rt = &rho[t * n * n];
        for (int i = 0; i < n; ++i)
          for (int c = 0; c < n; ++c) {
            std::uint64_t acc = 0;
            for (int j = 0; j < n; ++j) acc += std::uint64_t(re[i * n + j]) * as[j * n + c] % p;
            rt[i * n + c] = static_cast<std::uint32_t>(acc % p);
          }
        std::uint32_t* et = &expr[t * n * width];
        std::copy(ee, ee + n * width, et);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            std::uint32_t& slot = et[i * width + s * n + j];
            slot = static_cast<std::uint32_t>((slot + re[i * n + j]) % p);
          }
        ready[t] = 1;
        continue;
      }
      if (!ready[t]) throw std::logic_error("h1: Cayley target visited before its tree parent");
      const std::uint32_t* et = &expr[t * n * width];
      for (int i = 0; i < n && !done; ++i) {
        for (int c = 0; c < width; ++c) row[c] = (ee[i * width + c] + p - et[i * width + c]) % p;
        for (int j = 0; j < n; ++j) row[s * n + j] = (row[s * n + j] + re[i * n + j]) % p;
        ech.insert(row);
        if (opt.early_exit && ech.rank() == target) done = true;
      }
    }
  }
  rep.dim_Z1 = width - ech.rank();
  rep.h1 = rep.dim_Z1 - rep.dim_B1;
  if (rep.h1 < 0) throw std::logic_error("h1: Z^1 smaller than B^1; module action is not a representation");
  return rep;
}

/// H^1 with one unknown vector per group element: the full function space
/// G -> M cut down by phi(g s) = phi(g) + g.phi(s). B^1 is the span of
/// g -> g v - v over all g. Meant for small groups.
inline CohomologyReport h1_naive(const FiniteMatrixGroup& g, const ModuleAction& m) {
  detail::check_module(g, m);
  const std::uint32_t p = g.ell;
  const int n = m.dim;
  const std::size_t order = g.order();
  const int width = static_cast<int>(order) * n;
  std::vector<FpMatrix> act(order);
  for (std::size_t e = 0; e < order; ++e) {
    if (m.element_action) {
      act[e] = m.element_action(g.elements[e]);
    } else if (e == 0) {
      act[e] = fp::identity(n);
    } else {
      act[e] = fp::multiply(act[g.parent[e]], m.generator_action[g.parent_gen[e]], n, p);
    }
  }
  fp::DenseEchelon z(p, width);
  std::vector<std::uint32_t> row(width);
  for (std::size_t e = 0; e < order; ++e)
    for (int s = 0; s < g.num_generators(); ++s) {
      const std::size_t t = g.product(e, s);
      const std::size_t sidx = static_cast<std::size_t>(*g.find(g.generators[s]));
      for (int i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), 0);
        row[t * n + i] = (row[t * n + i] + 1) % p;
        row[e * n + i] = (row[e * n + i] + p - 1) % p;
        for (int j = 0; j < n; ++j) row[sidx * n + j] = (row[sidx * n + j] + p - act[e][i * n + j]) % p;
        z.insert(row);
      }
    }
  CohomologyReport rep;
  rep.dim_Z1 = width - z.rank();
  fp::DenseEchelon b(p, n);
  for (std::size_t e = 0; e < order; ++e)
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint32_t> r(act[e].begin() + i * n, act[e].begin() + (i + 1) * n);
      r[i] = (r[i] + p - 1) % p;
      b.insert(r);
    }
  rep.dim_B1 = b.rank();
  rep.h0 = n - rep.dim_B1;
  rep.h1 = rep.dim_Z1 - rep.dim_B1;
  return rep;
}

struct AdjointSummand {
  int exponent;
  int multiplicity;
  int h1;
};

struct AdjointH1Report {
  int total = 0;
  std::vector<AdjointSummand> summands;
};

/// H^1(SL2(F_ell), g) through the Kostant decomposition of g into
/// Sym^{2m} (x) det^{-m}, one summand per exponent m. Requires ell >= 2h-1.
inline AdjointH1Report adjoint_h1_via_kostant(const SimpleType& t, std::uint32_t ell, const SolverOptions& opt = {}) {
  const RootDatum d(t);
  const int bound = 2 * d.coxeter_number() - 1;
  prime_field(ell);
  if (ell < static_cast<std::uint32_t>(bound))
    throw std::invalid_argument("adjoint_h1_via_kostant: ell = " + std::to_string(ell) + " < 2h-1 = " +
                                std::to_string(bound) + " for " + t.name());
  const auto group = sl2_group(ell);
  AdjointH1Report rep;
  const auto& ex = d.exponents();
  for (std::size_t i = 0; i < ex.size();) {
    std::size_t j = i;
    while (j < ex.size() && ex[j] == ex[i]) ++j;
    const int m = ex[i], mult = static_cast<int>(j - i);
    const int h = h1(group, sym_module(group, 2 * m, m), opt).h1;
    rep.summands.push_back({m, mult, h});
    rep.total += mult * h;
    i = j;
  }
  return rep;
}

}  // namespace monolab
