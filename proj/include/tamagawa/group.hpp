#pragma once

#include <tamagawa/abelian.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tamagawa {

// Sorted list of element indices of a subgroup.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<int> elements);

  const std::vector<int>& elements() const { return elements_; }
  int order() const { return int(elements_.size()); }
  bool contains(int g) const;
  bool is_subset_of(const Subgroup& other) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }

 private:
  std::vector<int> elements_;
};

// Group of order at most 512 stored as a dense Cayley table.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 512;

  FiniteGroup() = default;
  // Validates closure, the Latin-square property, an identity and associativity.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[std::size_t(a) * std::size_t(n_) + std::size_t(b)]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int g, long long k) const;
  // x g x^{-1}
  int conj(int g, int x) const { return mul(mul(x, g), inverse_[x]); }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inverse_[a], inverse_[b])); }
  int element_order(int g) const { return orders_[g]; }
  bool is_abelian() const;
  const std::string& label(int g) const { return labels_[g]; }
  std::vector<std::vector<int>> table() const;

  Subgroup whole() const;
  Subgroup trivial() const { return Subgroup({identity_}); }

 private:
  int n_ = 0;
  int identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
};

FiniteGroup cyclic_group(int n);
// Symmetries of the regular n-gon, order 2n. Element r^k s^e has index k + n e.
FiniteGroup dihedral_group(int n);
// Index order: 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();
// (Z/n)^x with residues coprime to n listed in increasing order.
FiniteGroup units_mod(int n);
std::vector<int> unit_residues(int n);
// Row-major product: the first factor varies slowest.
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);
std::vector<int> product_coordinates(const std::vector<int>& orders, int index);
int product_index(const std::vector<int>& orders, const std::vector<int>& coordinates);
// Closure of permutations of {0..degree-1}; (a*b)(x) = a(b(x)).
// Elements are ordered lexicographically as image arrays.
FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators, int degree);

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators);
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient);
bool is_cyclic(const FiniteGroup& g, const Subgroup& h);
inline bool is_cyclic(const FiniteGroup& g) { return is_cyclic(g, g.whole()); }

enum class CosetSide { Left, Right };
// Cosets of h inside `ambient` (default: all of g), each sorted, ordered by least element.
std::vector<std::vector<int>> cosets(const FiniteGroup& g, const Subgroup& h, CosetSide side = CosetSide::Left);
std::vector<std::vector<int>> cosets_in(const FiniteGroup& g, const Subgroup& ambient, const Subgroup& h,
                                        CosetSide side = CosetSide::Left);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, int x);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& s);
inline Subgroup commutator_subgroup(const FiniteGroup& g) { return commutator_subgroup(g, g.whole()); }
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x);
// Lexicographically least conjugate.
Subgroup conjugacy_representative(const FiniteGroup& g, const Subgroup& h);
bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g);
// One lexicographically least representative per class, sorted by (order, elements).
std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const FiniteGroup& g);
// Removes repeats up to conjugacy, keeping canonical representatives.
std::vector<Subgroup> dedupe_up_to_conjugacy(const FiniteGroup& g, const std::vector<Subgroup>& subgroups);

Subgroup sylow(const FiniteGroup& g, int p);

// Image of a subgroup S in an abelian quotient S / M, with M normal in S and
// containing [S, S]. Elements are parent indices.
struct AbelianQuotient {
  FinAb group;
  Subgroup domain;
  Subgroup kernel;
  IntMatrix images;  // column k: coordinates of domain.elements()[k]
  std::vector<int> generator_lifts;

  IntVector image(int g) const;
};

AbelianQuotient abelian_quotient(const FiniteGroup& g, const Subgroup& s, const Subgroup& m);
AbelianQuotient abelianization(const FiniteGroup& g, const Subgroup& s);
inline AbelianQuotient abelianization(const FiniteGroup& g) { return abelianization(g, g.whole()); }
// S / [S,S] K for a subgroup K of S.
AbelianQuotient relative_abelianization(const FiniteGroup& g, const Subgroup& s, const Subgroup& k);

// Map A^ab -> B^ab induced by inclusion A <= B (both quotients of subgroups of g).
AbHom induced_inclusion(const AbelianQuotient& from, const AbelianQuotient& to);

// Normal subgroups of index 2.
std::vector<Subgroup> index_two_subgroups(const FiniteGroup& g);

}  // namespace tamagawa
