#include <tamagawa/arith.hpp>
#include <tamagawa/errors.hpp>
#include <tamagawa/landau.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace tamagawa {

bool is_landau_pair(std::uint64_t p, std::uint64_t q) {
  if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0) return false;
  if (!is_square(p - 1) || p == 1) return false;
  if ((q - 1) % p != 0 || !is_square((q - 1) / p) || q == 1) return false;
  return is_prime_u64(p) && is_prime_u64(q);
}

std::uint64_t landau_p_from_q(std::uint64_t q) {
  if (q < 2) throw DomainError("q must be at least 2");
  return squarefree_part(q - 1);
}

namespace {

constexpr std::uint64_t kQLimit = std::uint64_t(1) << 63;

void scan_range(std::uint64_t a_lo, std::uint64_t a_hi, std::uint64_t b_max, std::vector<LandauPair>& out) {
  for (std::uint64_t a = a_lo; a <= a_hi; ++a) {
    const std::uint64_t p = 1 + 4 * a * a;
    if (!is_prime_u64(p)) continue;
    // q = 1 + p b^2 is even for odd b.
    for (std::uint64_t b = 2; b <= b_max; b += 2) {
      const std::uint64_t q = 1 + p * b * b;
      if (is_prime_u64(q)) out.push_back({a, p, b, q});
    }
  }
}

}  // namespace

LandauSearchResult landau_search(std::uint64_t a_max, std::uint64_t b_max, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned __int128 pmax = 1 + 4 * (unsigned __int128)a_max * a_max;
  if (a_max > 0 && b_max > 0 && pmax * b_max * b_max + 1 >= kQLimit)
    throw RangeError("q = 1 + p b^2 would reach 2^63", {{"a_max", std::to_string(a_max)}, {"b_max", std::to_string(b_max)}});
  threads = std::max(1u, threads);
  const std::uint64_t chunk = 4096;
  const std::uint64_t nchunks = a_max == 0 ? 0 : (a_max + chunk - 1) / chunk;
  std::vector<std::vector<LandauPair>> parts(nchunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < nchunks;) {
      const std::uint64_t lo = 1 + c * chunk;
      scan_range(lo, std::min(a_max, lo + chunk - 1), b_max, parts[c]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  LandauSearchResult r;
  r.a_max = a_max;
  r.b_max = b_max;
  for (auto& part : parts) r.pairs.insert(r.pairs.end(), part.begin(), part.end());
  r.pair_count = r.pairs.size();
  std::uint64_t last_p = 0;
  for (const auto& pr : r.pairs)
    if (pr.p != last_p) {
      ++r.distinct_p_count;
      last_p = pr.p;
    }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<LandauPair> disjoint_family(const std::vector<LandauPair>& pairs, std::size_t r) {
  std::vector<LandauPair> out;
  std::uint64_t last_p = 0;
  for (const auto& pr : pairs) {
    if (out.size() == r) break;
    if (pr.p == last_p) continue;
    out.push_back(pr);
    last_p = pr.p;
  }
  if (out.size() < r) {
    std::vector<std::uint64_t> ps;
    for (const auto& pr : pairs) ps.push_back(pr.p);
    std::sort(ps.begin(), ps.end());
    const auto achievable = std::size_t(std::unique(ps.begin(), ps.end()) - ps.begin());
    throw ShortageError("not enough pairs with distinct p",
                        {{"requested", std::to_string(r)}, {"achievable", std::to_string(achievable)}});
  }
  return out;
}

std::string to_csv_line(const LandauPair& pr) {
  return std::to_string(pr.a) + "," + std::to_string(pr.p) + "," + std::to_string(pr.b) + "," + std::to_string(pr.q);
}

}  // namespace tamagawa
