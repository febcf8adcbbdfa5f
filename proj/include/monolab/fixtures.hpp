#pragma once

// Published reference values compiled into the binary. The same data ships
// as data/fixtures/reference.json; verify-paper checks that the two agree.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace monolab::fixtures {

/// Primes at which the Kostant summands fail to project onto every
/// negative simple root space (E6 under its split rule).
inline const std::map<std::string, std::vector<std::uint64_t>>& bad_prime_lists() {
  static const std::map<std::string, std::vector<std::uint64_t>> lists{
      {"G2", {2, 3, 5}},
      {"F4", {2, 3, 5, 7, 11}},
      {"E6", {2, 3, 5, 7, 11}},
      {"E7", {2, 3, 5, 7, 11, 13, 17, 19, 31, 37, 53}},
      {"E8", {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 61, 67, 71, 97, 103, 109, 229, 269, 397}},
  };
  return lists;
}

/// The E8 list with 367 in place of 397, matching the exclusion list
/// {229, 269, 367} quoted alongside the lifting theorem.
inline const std::vector<std::uint64_t>& e8_alternative_list() {
  static const std::vector<std::uint64_t> list{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 61, 67, 71, 97, 103, 109, 229, 269, 367};
  return list;
}

inline const std::vector<std::uint64_t>& e8_theorem_exclusions() {
  static const std::vector<std::uint64_t> list{229, 269, 367};
  return list;
}

inline const std::map<std::string, std::vector<int>>& exponent_tables() {
  static const std::map<std::string, std::vector<int>> t{
      {"G2", {1, 5}},
      {"F4", {1, 5, 7, 11}},
      {"E6", {1, 4, 5, 7, 8, 11}},
      {"E7", {1, 5, 7, 9, 11, 13, 17}},
      {"E8", {1, 7, 11, 13, 17, 19, 23, 29}},
  };
  return t;
}

inline const std::map<std::string, int>& root_counts() {
  static const std::map<std::string, int> t{{"G2", 12}, {"F4", 48}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
  return t;
}

/// ell must exceed 4h-1 for the principal-sl2 lifting argument in type E6.
inline constexpr int kE6PrincipalBound = 47;

}  // namespace monolab::fixtures
