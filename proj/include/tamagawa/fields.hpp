#pragma once

#include <tamagawa/lattice.hpp>
#include <tamagawa/torus.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tamagawa {

struct FieldDatum {
  NormTorusDatum datum;
  Rational predicted_tau;
};

// Galois CM datum: one pair with H = 1 and Ntilde = <iota>.
NormTorusDatum galois_cm_datum(const FiniteGroup& g, int iota, std::vector<Subgroup> decomposition_groups = {});

// The n-th cyclotomic field over Q, for n > 2 with n odd or 4 | n.
FieldDatum cyclotomic(int n);
// Decomposition group of the prime p in Gal(Q(zeta_n)/Q) = (Z/n)^*.
Subgroup cyclotomic_decomposition_group(const FiniteGroup& units, int n, std::uint64_t p);

struct LegendreEntry {
  std::uint64_t prime = 0;
  int exponent = 0;
  int symbol = 0;  // (P / prime)
};

struct Q8Datum {
  FieldDatum field;
  std::uint64_t p = 0, q = 0, a = 0, b = 0;  // P = 1 + a^2, Q = 1 + P b^2
  std::vector<LegendreEntry> legendre;
  bool has_nonresidue = false;
};

// Quaternion CM field attached to (P, Q); DomainError lists every failed condition.
Q8Datum q8_landau(std::uint64_t p, std::uint64_t q);

struct DihedralReport {
  int n = 0;
  NormTorusDatum datum;
  DensityBound density;
  Rational structural_tau;  // 0 when the density bound does not decide
  Rational engine_tau;  // all-cyclic decomposition groups: a lower bound
};

// n if g is dihedral of order 2n (n >= 3), else nullopt; rotation and reflection are written to the pointers.
std::optional<int> dihedral_parameter(const FiniteGroup& g, int* rotation = nullptr, int* reflection = nullptr);

// Dihedral group of order 2n with iota the central rotation; n must be even.
DihedralReport dihedral_cm(int n);

struct Classification {
  std::optional<Rational> tau;       // set when the structure decides tau
  std::vector<Rational> candidates;  // possible values when it does not
  std::optional<Rational> engine_tau;
  std::string rule;
};

// Complement of <iota> of index 2 avoiding iota, if any.
std::optional<Subgroup> iota_complement(const FiniteGroup& g, int iota);

Classification abelian_classifier(const FiniteGroup& g, int iota);
Classification split_classifier(const FiniteGroup& g, int iota, const std::vector<Subgroup>& decomposition_groups = {},
                                const CohomologyBudget& budget = CohomologyBudget{32, 12, 80'000'000});

}  // namespace tamagawa
