#pragma once

// Principal sl2-triple (X, H, Y) and the Kostant decomposition of the
// centralizer of X into H-eigenvectors, one per exponent.

#include "monolab/chevalley.hpp"
#include "monolab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace monolab {

/// Coefficients c_i with sum over positive roots of a^vee = sum_i c_i alpha_i^vee.
inline std::vector<std::int64_t> principal_coefficients(const RootDatum& d) {
  std::vector<std::int64_t> c(d.rank(), 0);
  for (const auto& r : d.positive_roots()) {
    const RootVec cr = d.coroot(r);  // throws on a non-integral coroot
    for (int i = 0; i < d.rank(); ++i) c[i] += cr[i];
  }
  for (auto v : c)
    if (v <= 0) throw std::logic_error("principal_coefficients: non-positive coefficient");
  return c;
}

template <class Ring>
struct Sl2Triple {
  LieElement<Ring> X;
  LieElement<Ring> H;
  LieElement<Ring> Y;
  std::vector<std::int64_t> c;
};

template <class Ring>
bool sl2_relations_hold(const Sl2Triple<Ring>& t) {
  const auto two = t.X.ring().from_integer(2);
  return bracket(t.X, t.H) == t.X.scaled(two) && bracket(t.Y, t.H) == t.Y.scaled(-two) &&
         bracket(t.Y, t.X) == t.H;
}

/// X = sum x_i, H = sum over positive roots of [y_a, x_a], Y = sum c_i y_i.
/// Over GF(ell) the construction requires ell >= h.
template <class Ring>
Sl2Triple<Ring> build_principal_sl2(const AlgebraPtr& alg, Ring ring = Ring{}) {
  const auto& d = alg->datum();
  const int h = d.coxeter_number();
  if (ring.characteristic() != 0 && ring.characteristic() < static_cast<std::uint32_t>(h)) {
    std::ostringstream msg;
    msg << "principal sl2 over GF(" << ring.characteristic() << ") for " << d.simple_type().name()
        << " needs ell >= h = " << h << " (Coxeter bound)";
    throw std::invalid_argument(msg.str());
  }
  Sl2Triple<Ring> t{LieElement<Ring>(alg, ring), LieElement<Ring>(alg, ring), LieElement<Ring>(alg, ring),
                    principal_coefficients(d)};
  for (int i = 0; i < d.rank(); ++i) {
    t.X.add_term(alg->x_index(i), ring.one());
    t.Y.add_term(alg->y_index(i), ring.from_integer(t.c[i]));
  }
  for (int a = 0; a < d.num_positive(); ++a)
    t.H += bracket(LieElement<Ring>::basis(alg, ring, alg->y_index(a)), LieElement<Ring>::basis(alg, ring, alg->x_index(a)));

  LieElement<Ring> h_from_c(alg, ring);
  for (int i = 0; i < d.rank(); ++i) h_from_c.add_term(alg->h_index(i), ring.from_integer(t.c[i]));
  if (!(h_from_c == t.H)) throw std::logic_error("principal sl2: H differs from sum c_i alpha_i^vee");
  if (!sl2_relations_hold(t)) throw std::logic_error("principal sl2: triple relations fail");
  return t;
}

namespace detail {

/// Matrix of ad(X) from grading g to grading g+1, restricted to basis
/// vectors; rows/cols index into the returned basis lists.
struct GradedBlock {
  std::vector<int> cols;
  std::vector<int> rows;
  BigMatrix matrix;
};

inline GradedBlock ad_block(const ChevalleyAlgebra& alg, const LieElement<IntegerRing>& x, int g) {
  GradedBlock blk;
  for (int b = 0; b < alg.dim(); ++b) {
    if (alg.grading(b) == g) blk.cols.push_back(b);
    if (alg.grading(b) == g + 1) blk.rows.push_back(b);
  }
  blk.matrix.assign(blk.rows.size(), BigVec(blk.cols.size(), 0));
  for (std::size_t j = 0; j < blk.cols.size(); ++j)
    for (const auto& [xi, xc] : x.terms()) {
      auto [beg, end] = alg.bracket_terms(xi, blk.cols[j]);
      for (auto t = beg; t != end; ++t) {
        auto pos = std::find(blk.rows.begin(), blk.rows.end(), t->index);
        if (pos == blk.rows.end()) throw std::logic_error("ad(X) is not homogeneous of degree one");
        blk.matrix[pos - blk.rows.begin()][j] += xc * t->coeff;
      }
    }
  return blk;
}

inline int max_grading(const ChevalleyAlgebra& alg) { return alg.datum().coxeter_number() - 1; }

}  // namespace detail

/// Saturated integral basis of the centralizer of X. ad(X) raises the root
/// grading by one, so the kernel is computed one graded piece at a time;
/// the result is ordered by grading and in Hermite form within each piece.
inline std::vector<LieElement<IntegerRing>> centralizer_of_X(const AlgebraPtr& alg,
                                                             const Sl2Triple<IntegerRing>& t) {
  std::vector<LieElement<IntegerRing>> out;
  const int top = detail::max_grading(*alg);
  for (int g = -top; g <= top; ++g) {
    auto blk = detail::ad_block(*alg, t.X, g);
    if (blk.cols.empty()) continue;
    for (const auto& v : integer_kernel(blk.matrix, blk.cols.size())) {
      LieElement<IntegerRing> e(alg, IntegerRing{});
      for (std::size_t j = 0; j < v.size(); ++j) e.add_term(blk.cols[j], v[j]);
      out.push_back(std::move(e));
    }
  }
  return out;
}

/// Centralizer of X over GF(ell), by the same graded decomposition.
inline std::vector<LieElement<PrimeField>> centralizer_of_X_mod(const AlgebraPtr& alg, PrimeField f) {
  std::vector<LieElement<PrimeField>> out;
  LieElement<IntegerRing> x(alg, IntegerRing{});
  for (int i = 0; i < alg->rank(); ++i) x.add_term(alg->x_index(i), 1);
  const int top = detail::max_grading(*alg);
  for (int g = -top; g <= top; ++g) {
    auto blk = detail::ad_block(*alg, x, g);
    if (blk.cols.empty()) continue;
    SparseEchelon<PrimeField> ech(f, static_cast<int>(blk.cols.size()));
    for (const auto& row : blk.matrix) {
      typename SparseEchelon<PrimeField>::Row r;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) r.emplace(static_cast<int>(j), f.from_integer(row[j]));
      ech.insert(std::move(r));
    }
    for (const auto& v : ech.kernel()) {
      LieElement<PrimeField> e(alg, f);
      for (std::size_t j = 0; j < v.size(); ++j) e.add_term(blk.cols[j], v[j]);
      out.push_back(std::move(e));
    }
  }
  return out;
}

struct KostantPair {
  int exponent;
  LieElement<IntegerRing> p;
};

struct KostantDecomposition {
  Sl2Triple<IntegerRing> triple;
  std::vector<KostantPair> pairs;

  std::vector<int> exponents() const {
    std::vector<int> m;
    for (const auto& pr : pairs) m.push_back(pr.exponent);
    return m;
  }
};

/// If [v, H] = lambda v, returns lambda; otherwise throws.
template <class Ring>
BigInt h_eigenvalue(const LieElement<Ring>& v, const LieElement<Ring>& h) {
  if (v.is_zero()) throw std::invalid_argument("h_eigenvalue: zero vector");
  const auto w = bracket(v, h);
  const auto& [i0, c0] = *v.terms().begin();
  const auto wc = w.coeff(i0);
  if constexpr (std::is_same_v<typename Ring::value_type, BigInt>) {
    if (wc % c0 != 0) throw std::logic_error("H does not act diagonally on the centralizer");
    const BigInt lambda = wc / c0;
    if (!(w == v.scaled(lambda))) throw std::logic_error("H does not act diagonally on the centralizer");
    return lambda;
  } else {
    static_assert(sizeof(Ring) == 0, "h_eigenvalue: integral elements only");
  }
}

/// H-eigenbasis p_1..p_l of the centralizer of X, with [p_i, H] = 2 m_i p_i,
/// sorted by exponent. Each p_i is primitive with positive leading entry.
inline KostantDecomposition kostant_decomposition(const AlgebraPtr& alg, const Sl2Triple<IntegerRing>& t) {
  KostantDecomposition k{t, {}};
  for (auto& p : centralizer_of_X(alg, t)) {
    const BigInt lambda = h_eigenvalue(p, t.H);
    if (lambda <= 0 || lambda % 2 != 0) throw std::logic_error("kostant: eigenvalue is not a positive even integer");
    k.pairs.push_back({static_cast<int>(lambda / 2), std::move(p)});
  }
  std::stable_sort(k.pairs.begin(), k.pairs.end(),
                   [](const KostantPair& a, const KostantPair& b) { return a.exponent < b.exponent; });
  if (k.exponents() != alg->datum().exponents())
    throw std::logic_error("kostant: eigenvalues on the centralizer do not match the exponents");
  return k;
}

inline KostantDecomposition kostant_decomposition(const AlgebraPtr& alg) {
  return kostant_decomposition(alg, build_principal_sl2<IntegerRing>(alg));
}

/// Rank over GF(ell) of the reduced sl2-strings {ad(Y)^k p_i : 0 <= k <= 2 m_i}.
/// Equals dim g exactly when the decomposition survives reduction mod ell.
inline int string_basis_rank_mod(const KostantDecomposition& k, std::uint64_t ell) {
  const auto y = base_change(k.triple.Y, ell);
  const int dim = k.triple.X.algebra()->dim();
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& pr : k.pairs) {
    auto v = base_change(pr.p, ell);
    for (int j = 0; j <= 2 * pr.exponent; ++j) {
      std::vector<std::uint32_t> row(dim, 0);
      for (const auto& [i, c] : v.terms()) row[i] = c.value();
      rows.push_back(std::move(row));
      v = bracket(y, v);
    }
  }
  return rank_mod_p(std::move(rows), static_cast<std::uint32_t>(ell));
}

}  // namespace monolab
