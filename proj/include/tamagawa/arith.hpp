#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tamagawa {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin on the first twelve prime bases; exact for all
// 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);

// Prime factorisation of 1 <= n <= 2^63: trial division up to 10^6, then
// Pollard rho. Sorted by prime.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::uint64_t squarefree_part(std::uint64_t n);

// Legendre symbol (a/p) for an odd prime p.
int legendre(std::int64_t a, std::uint64_t p);

}  // namespace tamagawa
