#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tamagawa {

// p = 1 + 4a^2 and q = 1 + p b^2, both prime.
struct LandauPair {
  std::uint64_t a = 0;
  std::uint64_t p = 0;
  std::uint64_t b = 0;
  std::uint64_t q = 0;

  friend bool operator==(const LandauPair&, const LandauPair&) = default;
};

// Odd primes with p - 1 a square and q - 1 = p b^2.
bool is_landau_pair(std::uint64_t p, std::uint64_t q);
// For q of the shape 1 + p b^2 the prime p is the square-free part of q - 1.
std::uint64_t landau_p_from_q(std::uint64_t q);

struct LandauSearchResult {
  std::vector<LandauPair> pairs;  // sorted by (p, q)
  std::uint64_t pair_count = 0;
  std::uint64_t distinct_p_count = 0;
  std::uint64_t a_max = 0;
  std::uint64_t b_max = 0;
  double elapsed_ms = 0;
};

// Scans 1 <= a <= a_max, 1 <= b <= b_max. Work is split into chunks of a and
// merged in order, so the result does not depend on `threads`.
LandauSearchResult landau_search(std::uint64_t a_max, std::uint64_t b_max, unsigned threads = 1);

// Greedy choice of r pairs with pairwise distinct p (first q for each p).
std::vector<LandauPair> disjoint_family(const std::vector<LandauPair>& pairs, std::size_t r);

std::string to_csv_line(const LandauPair& pair);

}  // namespace tamagawa
