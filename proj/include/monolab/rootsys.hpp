#pragma once

// Root systems of the simple types, built from their Cartan matrices.
//
// Roots live in simple-root coordinates. Positive roots are ordered by
// height, then by descending lexicographic order of the coordinate vector,
// which puts alpha_i at index i-1 (Bourbaki labelling). Index N+i holds the
// negative of positive root i.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monolab {

using RootVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

class SimpleType {
 public:
  SimpleType(char family, int rank) : family_(family), rank_(rank) {
    if (!valid(family, rank))
      throw std::invalid_argument("SimpleType: " + std::string(1, family) + std::to_string(rank) +
                                  " is not a Cartan type");
  }

  /// Parses "E8", "g2", "A10".
  static SimpleType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("SimpleType: cannot parse '" + s + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::size_t used = 0;
    int r = 0;
    try {
      r = std::stoi(s.substr(1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("SimpleType: cannot parse '" + s + "'");
    }
    if (used != s.size() - 1) throw std::invalid_argument("SimpleType: cannot parse '" + s + "'");
    return SimpleType(f, r);
  }

  static bool valid(char f, int r) {
    switch (f) {
      case 'A': return r >= 1;
      case 'B': return r >= 2;
      case 'C': return r >= 3;
      case 'D': return r >= 4;
      case 'E': return r >= 6 && r <= 8;
      case 'F': return r == 4;
      case 'G': return r == 2;
      default: return false;
    }
  }

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, family_) + std::to_string(rank_); }
  bool is_exceptional() const { return family_ >= 'E'; }

  bool operator==(const SimpleType&) const = default;

 private:
  char family_;
  int rank_;
};

inline const std::vector<SimpleType>& exceptional_types() {
  static const std::vector<SimpleType> types{{'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}};
  return types;
}

/// A[i][j] = <alpha_i^vee, alpha_j>, Bourbaki labelling.
inline IntMatrix cartan_matrix(const SimpleType& t) {
  const int n = t.rank();
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family()) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

class RootDatum {
 public:
  explicit RootDatum(const SimpleType& t) : type_(t), cartan_(cartan_matrix(t)) {
    l_ = t.rank();
    compute_symmetrizer();
    enumerate_roots();
    compute_exponents();
  }

  const SimpleType& simple_type() const { return type_; }
  int rank() const { return l_; }
  const IntMatrix& cartan() const { return cartan_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }
  int dim() const { return num_roots() + l_; }
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  const RootVec& positive_root(int i) const { return positive_.at(i); }

  /// Root with index in [0, 2N): negatives follow positives.
  RootVec root(int idx) const {
    const int n = num_positive();
    if (idx < n) return positive_.at(idx);
    RootVec v = positive_.at(idx - n);
    for (int& c : v) c = -c;
    return v;
  }
  int negate_index(int idx) const { return idx < num_positive() ? idx + num_positive() : idx - num_positive(); }
  bool is_positive_index(int idx) const { return idx < num_positive(); }

  std::optional<int> find_root(const RootVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_root(const RootVec& v) const { return index_.count(v) != 0; }

  int height(const RootVec& v) const {
    require_root(v);
    return std::accumulate(v.begin(), v.end(), 0);
  }

  /// Coroot in simple-coroot coordinates: alpha^vee = sum_i k_i d_i/d_alpha alpha_i^vee.
  RootVec coroot(const RootVec& v) const {
    require_root(v);
    const int len = norm2(v);
    RootVec c(l_);
    for (int i = 0; i < l_; ++i) {
      const int num = v[i] * 2 * sym_[i];
      if (num % len != 0) throw std::logic_error("coroot: non-integral coroot coordinate");
      c[i] = num / len;
    }
    return c;
  }

  /// <v, alpha_j^vee> for a weight v in simple-root coordinates.
  int pairing_with_simple_coroot(const RootVec& v, int j) const {
    int s = 0;
    for (int k = 0; k < l_; ++k) s += v[k] * cartan_[j][k];
    return s;
  }

  /// Symmetric form (a, b) normalised so that the shortest roots have (a,a) = 2.
  int inner(const RootVec& a, const RootVec& b) const {
    int s = 0;
    for (int i = 0; i < l_; ++i)
      for (int j = 0; j < l_; ++j) s += a[i] * sym_[i] * cartan_[i][j] * b[j];
    return s;
  }
  int norm2(const RootVec& a) const { return inner(a, a); }

  const RootVec& highest_root() const { return positive_.back(); }
  int coxeter_number() const { return height(highest_root()) + 1; }
  const std::vector<int>& exponents() const { return exponents_; }
  /// Number of positive roots of each height k = 1..h-1 (index k-1).
  const std::vector<int>& height_counts() const { return height_counts_; }
  bool weyl_has_minus_one() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int m) { return m % 2 == 1; });
  }

 private:
  void require_root(const RootVec& v) const {
    if (!is_root(v)) throw std::invalid_argument("RootDatum: vector is not a root of " + type_.name());
  }

  void compute_symmetrizer() {
    // d_i A_ij = d_j A_ji, propagated along the Dynkin diagram.
    std::vector<std::int64_t> num(l_, 0), den(l_, 1);
    num[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < l_; ++j) {
        if (j == i || cartan_[i][j] == 0 || num[j] != 0) continue;
        num[j] = num[i] * cartan_[i][j];
        den[j] = den[i] * cartan_[j][i];
        auto g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        if (den[j] < 0) {
          num[j] = -num[j];
          den[j] = -den[j];
        }
        stack.push_back(j);
      }
    }
    std::int64_t lcm = 1;
    for (auto d : den) lcm = std::lcm(lcm, d);
    sym_.resize(l_);
    std::int64_t g = 0;
    for (int i = 0; i < l_; ++i) {
      sym_[i] = static_cast<int>(num[i] * (lcm / den[i]));
      g = std::gcd(g, static_cast<std::int64_t>(sym_[i]));
    }
    for (int& s : sym_) s = static_cast<int>(s / g);
  }

  void enumerate_roots() {
    // Height-by-height closure: beta + alpha_i is a root iff q > 0 where
    // q = p - <beta, alpha_i^vee> and p is the length of the alpha_i-string below beta.
    std::vector<std::vector<RootVec>> layers;
    std::vector<RootVec> simple;
    for (int i = 0; i < l_; ++i) {
      RootVec e(l_, 0);
      e[i] = 1;
      simple.push_back(e);
    }
    layers.push_back(simple);
    std::map<RootVec, int> seen;
    for (auto& r : simple) seen[r] = 1;
    while (true) {
      std::vector<RootVec> next;
      for (const auto& beta : layers.back()) {
        for (int i = 0; i < l_; ++i) {
          RootVec down = beta;
          int p = 0;
          while (true) {
            down[i] -= 1;
            if (!seen.count(down)) break;
            ++p;
          }
          const int q = p - pairing_with_simple_coroot(beta, i);
          if (q <= 0) continue;
          RootVec up = beta;
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = 1;
            next.push_back(up);
          }
        }
      }
      if (next.empty()) break;
      layers.push_back(std::move(next));
    }
    for (auto& layer : layers) {
      std::sort(layer.begin(), layer.end(), std::greater<>());
      height_counts_.push_back(static_cast<int>(layer.size()));
      for (auto& r : layer) positive_.push_back(r);
    }
    const int n = num_positive();
    for (int i = 0; i < n; ++i) index_[positive_[i]] = i;
    for (int i = 0; i < n; ++i) {
      RootVec neg = positive_[i];
      for (int& c : neg) c = -c;
      index_[neg] = n + i;
    }
  }

  void compute_exponents() {
    // Exponents form the conjugate of the height partition.
    const int hmax = static_cast<int>(height_counts_.size());
    for (int m = 1; m <= hmax; ++m) {
      const int here = height_counts_[m - 1];
      const int above = m < hmax ? height_counts_[m] : 0;
      for (int k = 0; k < here - above; ++k) exponents_.push_back(m);
    }
  }

  SimpleType type_;
  IntMatrix cartan_;
  int l_ = 0;
  std::vector<int> sym_;
  std::vector<RootVec> positive_;
  std::map<RootVec, int> index_;
  std::vector<int> height_counts_;
  std::vector<int> exponents_;
};

inline RootDatum build_root_datum(const SimpleType& t) { return RootDatum(t); }

/// -1 lies in the Weyl group iff every exponent is odd.
inline bool weyl_contains_minus_one(const SimpleType& t) { return RootDatum(t).weyl_has_minus_one(); }

}  // namespace monolab
