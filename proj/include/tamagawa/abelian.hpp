#pragma once

#include <tamagawa/integer.hpp>
#include <tamagawa/smith.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tamagawa {

// Finite abelian group Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and d_i >= 2.
// The empty list is the trivial group.
class FinAb {
 public:
  FinAb() = default;
  explicit FinAb(std::vector<std::int64_t> invariant_factors);

  static FinAb cyclic(std::int64_t n);

  Index rank() const { return Index(factors_.size()); }
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::int64_t factor(Index i) const { return factors_[i]; }
  BigInt order() const;
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  IntVector zero() const { return IntVector::Zero(rank()); }
  IntVector reduce(const IntVector& x) const;
  IntVector reduce(const BigVector& x) const;
  // Every element, in lexicographic coordinate order. Intended for small groups.
  std::vector<IntVector> elements() const;
  std::int64_t element_order(const IntVector& x) const;

  std::string to_string() const;

  friend bool operator==(const FinAb& a, const FinAb& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<std::int64_t> factors_;
};

// Homomorphism given by an integer matrix of shape codomain.rank x domain.rank,
// acting on invariant-factor coordinates.
class AbHom {
 public:
  AbHom() = default;
  AbHom(FinAb domain, FinAb codomain, IntMatrix matrix);

  static AbHom zero(const FinAb& domain, const FinAb& codomain);
  static AbHom identity(const FinAb& a);

  const FinAb& domain() const { return domain_; }
  const FinAb& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector operator()(const IntVector& x) const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;

  friend AbHom operator*(const AbHom& g, const AbHom& f);  // g after f
  friend bool operator==(const AbHom& a, const AbHom& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
  }

 private:
  FinAb domain_;
  FinAb codomain_;
  IntMatrix matrix_;
};

// A subgroup S of a group A, with its own invariant-factor basis.
struct SubgroupEmbedding {
  FinAb group;
  AbHom inclusion;  // group -> ambient

  // Coordinates in `group` of an ambient element lying in the subgroup.
  bool contains(const IntVector& ambient_element) const;
  IntVector coordinates(const IntVector& ambient_element) const;
};

struct QuotientMap {
  FinAb group;
  AbHom projection;  // ambient -> group
};

// Z^m modulo the column span of a relation matrix. `projection` maps Z^m onto
// the torsion coordinates; `lift` sends each torsion generator back to Z^m.
struct Presentation {
  FinAb torsion;
  Index free_rank = 0;
  IntMatrix projection;  // torsion.rank x m
  BigMatrix lift;        // m x torsion.rank
};

Presentation present(const BigMatrix& relations);

// Finite cokernel of M : Z^n -> Z^m. Throws DomainError if it is infinite.
QuotientMap cokernel(const IntMatrix& m);

SubgroupEmbedding subgroup_generated(const FinAb& a, const IntMatrix& generators);
QuotientMap quotient(const FinAb& a, const IntMatrix& generators);

SubgroupEmbedding kernel_of_hom(const AbHom& f);
SubgroupEmbedding image_of_hom(const AbHom& f);
QuotientMap cokernel_of_hom(const AbHom& f);

// Characters are written in the basis chi_j(e_k) = delta_jk / d_j, so the dual
// has the same invariant factors.
FinAb dual_group(const FinAb& a);
AbHom dual_hom(const AbHom& f);
// Value chi(x) in Q/Z, as a reduced fraction in [0, 1).
Rational pairing(const FinAb& a, const IntVector& chi, const IntVector& x);

// Characters of A vanishing on the subgroup generated by W (columns).
SubgroupEmbedding annihilator(const FinAb& a, const IntMatrix& w);

struct DirectSum {
  FinAb group;
  std::vector<AbHom> injections;
  std::vector<AbHom> projections;
};
DirectSum direct_sum(const std::vector<FinAb>& summands);

// Stacks maps with a common domain into one map to the direct sum.
AbHom combine(const std::vector<AbHom>& maps, const DirectSum& target);
// Sums maps with a common codomain out of the direct sum.
AbHom codiagonal(const std::vector<AbHom>& maps, const DirectSum& source);

// Subgroup of elements killed by n.
SubgroupEmbedding torsion_subgroup(const FinAb& a, std::int64_t n);

// Invariant factors of A + B as a group (no maps).
FinAb operator+(const FinAb& a, const FinAb& b);

}  // namespace tamagawa
