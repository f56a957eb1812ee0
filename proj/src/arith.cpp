#include <tamagawa/arith.hpp>
#include <tamagawa/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tamagawa {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  static constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = std::uint64_t(std::sqrt(double(n)));
  while (r > 0 && (unsigned __int128)r * r > n) --r;
  while ((unsigned __int128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorise zero");
  if (n > (std::uint64_t(1) << 63)) throw RangeError("factorisation input exceeds 2^63");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  split(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, int>> out;
  for (auto p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::uint64_t squarefree_part(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto [p, e] : factorize(n))
    if (e % 2) r *= p;
  return r;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw DomainError("Legendre symbol needs an odd prime modulus", {{"p", std::to_string(p)}});
  std::int64_t r = a % std::int64_t(p);
  if (r < 0) r += std::int64_t(p);
  if (r == 0) return 0;
  return powmod(std::uint64_t(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace tamagawa
