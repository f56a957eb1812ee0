#pragma once

#include <tamagawa/group.hpp>
#include <tamagawa/transfer.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + std::int64_t(engine_() % std::uint64_t(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// The orders of elements of an abelian group determine it.
inline std::vector<int> order_histogram(const tamagawa::FinAb& a) {
  std::vector<int> h(std::size_t(a.exponent()) + 1, 0);
  for (const auto& x : a.elements()) ++h[std::size_t(a.element_order(x))];
  return h;
}

struct NamedGroup {
  std::string name;
  tamagawa::FiniteGroup group;
};

inline tamagawa::FiniteGroup alternating4() { return tamagawa::permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4); }
inline tamagawa::FiniteGroup symmetric4() { return tamagawa::permutation_group({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4); }

// Groups used by the property suites, all of order <= max_order.
inline std::vector<NamedGroup> group_corpus(int max_order) {
  using namespace tamagawa;
  std::vector<NamedGroup> all;
  auto c = [](int n) { return cyclic_group(n); };
  for (int n = 1; n <= 32; ++n) all.push_back({"C" + std::to_string(n), c(n)});
  for (int n = 2; n <= 16; ++n) all.push_back({"D" + std::to_string(n), dihedral_group(n)});
  all.push_back({"Q8", quaternion_group()});
  all.push_back({"C2xC2", direct_product({c(2), c(2)})});
  all.push_back({"C2xC4", direct_product({c(2), c(4)})});
  all.push_back({"C2^3", direct_product({c(2), c(2), c(2)})});
  all.push_back({"C3xC3", direct_product({c(3), c(3)})});
  all.push_back({"C4xC4", direct_product({c(4), c(4)})});
  all.push_back({"C2xC8", direct_product({c(2), c(8)})});
  all.push_back({"C2xC2xC4", direct_product({c(2), c(2), c(4)})});
  all.push_back({"C2^4", direct_product({c(2), c(2), c(2), c(2)})});
  all.push_back({"C3xC6", direct_product({c(3), c(6)})});
  all.push_back({"Q8xC2", direct_product({quaternion_group(), c(2)})});
  all.push_back({"Q8xC4", direct_product({quaternion_group(), c(4)})});
  all.push_back({"D4xC2", direct_product({dihedral_group(4), c(2)})});
  all.push_back({"D4xC4", direct_product({dihedral_group(4), c(4)})});
  all.push_back({"D3xC3", direct_product({dihedral_group(3), c(3)})});
  all.push_back({"D3xC4", direct_product({dihedral_group(3), c(4)})});
  all.push_back({"A4", alternating4()});
  all.push_back({"A4xC2", direct_product({alternating4(), c(2)})});
  all.push_back({"S4", symmetric4()});
  all.push_back({"U(15)", units_mod(15)});
  all.push_back({"U(16)", units_mod(16)});
  all.push_back({"U(21)", units_mod(21)});
  all.push_back({"U(24)", units_mod(24)});
  std::vector<NamedGroup> out;
  for (auto& g : all)
    if (g.group.order() <= max_order) out.push_back(std::move(g));
  return out;
}

// Transfer of x straight from the definition with an arbitrary section: the
// product in H of the correction terms, as an element of H (order of the
// product is irrelevant modulo [H,H]). Left: x s_c = s_{c'} h. Right: s_c x = h s_{c'}.
inline int brute_transfer(const tamagawa::FiniteGroup& g, const tamagawa::Subgroup& h, int x,
                          const std::vector<int>& section, tamagawa::CosetSide side) {
  std::vector<int> coset_of(std::size_t(g.order()), -1);
  const auto cs = tamagawa::cosets(g, h, side);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (int y : cs[i]) coset_of[std::size_t(y)] = int(i);
  int prod = g.identity();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const int s = section[i];
    if (side == tamagawa::CosetSide::Left) {
      const int moved = g.mul(x, s);
      prod = g.mul(prod, g.mul(g.inv(section[std::size_t(coset_of[moved])]), moved));
    } else {
      const int moved = g.mul(s, x);
      prod = g.mul(prod, g.mul(moved, g.inv(section[std::size_t(coset_of[moved])])));
    }
  }
  return prod;
}

inline std::vector<int> random_section(const tamagawa::FiniteGroup& g, const tamagawa::Subgroup& h,
                                       tamagawa::CosetSide side, Rng& rng) {
  std::vector<int> s;
  for (const auto& c : tamagawa::cosets(g, h, side)) s.push_back(c[std::size_t(rng.uniform(0, std::int64_t(c.size()) - 1))]);
  return s;
}

struct TransferInstance {
  std::string name;
  tamagawa::FiniteGroup g;
  tamagawa::Subgroup h;
};

// Distinct random (G, H) pairs with 1 < |H| < |G| <= 32.
inline std::vector<TransferInstance> transfer_instances(int count, std::uint64_t seed) {
  using namespace tamagawa;
  Rng rng(seed);
  std::vector<TransferInstance> pool;
  for (const auto& [name, g] : group_corpus(32)) {
    if (g.order() < 4) continue;
    std::vector<Subgroup> subs = cyclic_subgroups(g);
    subs.push_back(commutator_subgroup(g));
    subs.push_back(center(g));
    for (int p : {2, 3})
      if (g.order() % p == 0) subs.push_back(sylow(g, p));
    for (const auto& s : subs)
      if (s.order() > 1 && s.order() < g.order()) pool.push_back({name, g, s});
  }
  std::vector<TransferInstance> out;
  std::set<std::size_t> used;
  while (int(out.size()) < count) {
    const auto k = std::size_t(rng.uniform(0, std::int64_t(pool.size()) - 1));
    if (used.insert(k).second) out.push_back(pool[k]);
  }
  return out;
}

inline tamagawa::IntVector transfer_coords(const tamagawa::TransferMap& t, int h_element) {
  return t.target.group.reduce(t.target.image(h_element));
}

}  // namespace testing_support
