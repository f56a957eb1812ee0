#include <tamagawa/errors.hpp>
#include <tamagawa/transfer.hpp>

#include <numeric>

namespace tamagawa {

std::vector<int> canonical_section(const FiniteGroup& g, const Subgroup& s, const Subgroup& t, CosetSide side) {
  std::vector<int> reps;
  for (const auto& c : cosets_in(g, s, t, side)) reps.push_back(c.front());
  return reps;
}

TransferMap transfer_map(const FiniteGroup& g, const Subgroup& s, const Subgroup& t, const Subgroup& k,
                         CosetSide side, const std::vector<int>* section) {
  if (!t.is_subset_of(s)) throw DomainError("transfer target is not a subgroup of the source");
  TransferMap out{abelianization(g, s), relative_abelianization(g, t, k), {}};
  const auto cs = cosets_in(g, s, t, side);
  std::vector<int> coset_of(g.order(), -1);
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (int x : cs[c]) coset_of[x] = int(c);
  std::vector<int> phi = section ? *section : canonical_section(g, s, t, side);
  if (phi.size() != cs.size()) throw DomainError("section has the wrong number of representatives");
  for (std::size_t c = 0; c < cs.size(); ++c)
    if (phi[c] < 0 || phi[c] >= g.order() || coset_of[phi[c]] != int(c))
      throw DomainError("section element lies in the wrong coset", {{"coset", std::to_string(c)}});

  const FinAb& target = out.target.group;
  IntMatrix m(target.rank(), out.source.group.rank());
  for (Index gen = 0; gen < out.source.group.rank(); ++gen) {
    const int x = out.source.generator_lifts[gen];
    IntVector acc = target.zero();
    for (std::size_t c = 0; c < cs.size(); ++c) {
      int h;
      if (side == CosetSide::Left) {
        const int moved = coset_of[g.mul(x, phi[c])];
        h = g.mul(g.inv(phi[moved]), g.mul(x, phi[c]));
      } else {
        const int moved = coset_of[g.mul(phi[c], x)];
        h = g.mul(g.mul(phi[c], x), g.inv(phi[moved]));
      }
      acc += out.target.image(h);
    }
    m.col(gen) = target.reduce(acc);
  }
  out.map = AbHom(out.source.group, target, m);
  return out;
}

AbHom transfer(const FiniteGroup& g, const Subgroup& h) { return transfer_map(g, g.whole(), h, g.trivial()).map; }

AbHom relative_transfer(const FiniteGroup& g, const Subgroup& ntilde, const Subgroup& h) {
  if (!h.is_subset_of(ntilde)) throw DomainError("relative transfer needs H inside Ntilde");
  return transfer_map(g, g.whole(), ntilde, h).map;
}

DoubleCosetTransfer transfer_cyclic_double_coset(const FiniteGroup& g, const Subgroup& ntilde, const Subgroup& h,
                                                 int element) {
  if (!h.is_subset_of(ntilde)) throw DomainError("relative transfer needs H inside Ntilde");
  if (!is_normal_in(g, h, ntilde)) throw DomainError("H is not normal in Ntilde");
  AbelianQuotient quo = relative_abelianization(g, ntilde, h);
  const std::int64_t n = ntilde.order() / h.order();
  if (!quo.group.is_cyclic() || quo.group.order() != n)
    throw DomainError("Ntilde/H is not cyclic", {{"quotient", quo.group.to_string()}});
  DoubleCosetTransfer out;
  out.generator = quo.generator_lifts.empty() ? g.identity() : quo.generator_lifts.front();

  const auto cs = cosets(g, ntilde);
  std::vector<int> coset_of(g.order(), -1);
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (int x : cs[c]) coset_of[x] = int(c);
  std::vector<char> seen(cs.size(), 0);
  std::int64_t total = 0;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (seen[c]) continue;
    const int x = cs[c].front();
    int f = 0, y = x;
    do {
      seen[coset_of[y]] = 1;
      y = g.mul(element, y);
      ++f;
    } while (coset_of[y] != int(c));
    out.orbit_lengths.push_back(f);
    const int inside = g.mul(g.inv(x), g.mul(g.pow(element, f), x));
    if (!ntilde.contains(inside)) throw InternalError("orbit return element left Ntilde");
    if (n > 1) total += quo.image(inside)[0];
  }
  // sigma has coordinate 1 in Z/n, so the exponent equals the coordinate sum.
  out.exponent = n > 1 ? mod_floor(total, n) : 0;
  out.value = quo.group.zero();
  if (n > 1) out.value[0] = out.exponent;
  return out;
}

SurjectivityCheck transfer_surjectivity_check(const FiniteGroup& g, const Subgroup& n) {
  const int p = n.order();
  bool prime = p >= 2;
  for (int d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
  if (!prime) throw DomainError("N must have prime order", {{"order", std::to_string(p)}});
  if (!is_normal(g, n)) throw DomainError("N must be normal");
  SurjectivityCheck out;
  out.prime = p;
  out.transfer_surjective = transfer(g, n).is_surjective();
  out.sylow_cyclic = is_cyclic(g, sylow(g, p));
  return out;
}

}  // namespace tamagawa
