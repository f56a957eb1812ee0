#pragma once

#include <tamagawa/group.hpp>

#include <vector>

namespace tamagawa {

// Transfer S^ab -> T / [T,T]K for K <= T <= S inside g. With the left-coset
// convention a section phi of S/T gives g phi(x) = phi(gx) h(g,x) and the
// transfer of g is the product of the h(g,x). On the right, phi(x) g = h phi(xg).
struct TransferMap {
  AbelianQuotient source;
  AbelianQuotient target;
  AbHom map;

  IntVector operator()(int element) const { return map(source.image(element)); }
};

// Least element of every coset of T in S, in the order returned by cosets_in.
std::vector<int> canonical_section(const FiniteGroup& g, const Subgroup& s, const Subgroup& t,
                                   CosetSide side = CosetSide::Left);

TransferMap transfer_map(const FiniteGroup& g, const Subgroup& s, const Subgroup& t, const Subgroup& k,
                         CosetSide side = CosetSide::Left, const std::vector<int>* section = nullptr);

// Ver : G^ab -> H^ab.
AbHom transfer(const FiniteGroup& g, const Subgroup& h);
// Ver : G^ab -> Ntilde / [Ntilde,Ntilde] H. Requires H <= Ntilde.
AbHom relative_transfer(const FiniteGroup& g, const Subgroup& ntilde, const Subgroup& h);

// Value of the relative transfer on one element, computed orbit by orbit:
// for each <g>-orbit of G/Ntilde with representative x and length f,
// x^{-1} g^f x lies in Ntilde and contributes sigma^m. Requires Ntilde/H cyclic.
struct DoubleCosetTransfer {
  std::int64_t exponent = 0;  // total m, modulo |Ntilde/H|
  int generator = 0;          // element of Ntilde lifting sigma
  IntVector value;            // coordinates in Ntilde/H
  std::vector<int> orbit_lengths;
};
DoubleCosetTransfer transfer_cyclic_double_coset(const FiniteGroup& g, const Subgroup& ntilde, const Subgroup& h,
                                                 int element);

struct SurjectivityCheck {
  int prime = 0;
  bool transfer_surjective = false;
  bool sylow_cyclic = false;
};
// For N normal of prime order p: the transfer G^ab -> N is onto exactly when
// the Sylow p-subgroup is cyclic.
SurjectivityCheck transfer_surjectivity_check(const FiniteGroup& g, const Subgroup& n);

}  // namespace tamagawa
