#pragma once

#include <tamagawa/group.hpp>
#include <tamagawa/transfer.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tamagawa {

// One factor K_i / E_i of the multinorm-one torus: H_i = Gal(L/K_i) inside
// Ntilde_i = Gal(L/E_i).
struct TorusPair {
  Subgroup h;
  Subgroup ntilde;
};

struct NormTorusDatum {
  FiniteGroup group;
  std::vector<TorusPair> pairs;
  std::optional<int> iota;  // complex conjugation for CM data
  std::vector<Subgroup> decomposition_groups;
  bool include_all_cyclic = true;
  bool declared_complete = false;

  // Throws ConstructionError on malformed data.
  void validate() const;

  // Every H_i is normal in Ntilde_i with cyclic quotient.
  bool cyclic_n() const;
  // Every Ntilde_i is normal in G.
  bool normal_ntilde() const;
  // iota is given, and for every pair Ntilde_i = H_i <iota> with iota outside H_i.
  bool is_cm() const;

  // Supplied groups, plus all cyclic subgroups if requested, plus <iota>,
  // reduced to canonical representatives up to conjugacy.
  std::vector<Subgroup> effective_decomposition_groups() const;
};

struct TamagawaReport {
  FinAb h1_lambda1;
  FinAb h1_lambda;
  FinAb h2z_prime;
  FinAb sha2_lambda;
  Rational tau;
  std::optional<BigInt> n_k;
  bool exact = false;
  std::vector<Subgroup> decomposition_groups;
};

// H^1(G, Lambda^1) = sum of the duals of N_i^ab.
FinAb h1_lambda1(const NormTorusDatum& d);
// Kernel of the dual of G^ab -> prod N_i^ab, inside the sum of the duals of N_i^ab.
SubgroupEmbedding h1_lambda(const NormTorusDatum& d);
// Characters of G^ab vanishing on the images of ker(D^ab -> prod D_i/(D_i cap xH_ix^-1))
// for every decomposition group D, x running over G/Ntilde_i. Needs cyclic_n() and normal_ntilde().
SubgroupEmbedding h2z_primitive(const NormTorusDatum& d);
FinAb sha2_lambda(const NormTorusDatum& d);
TamagawaReport tamagawa_number(const NormTorusDatum& d);

// For CM data: subgroup of (Z/2)^r of sign vectors a with sum over a_i = -1 of
// |Phi_i(g)| even for all g, where Phi_i is a CM type. `flips[i][c]` swaps the
// chosen half of the c-th coset of Ntilde_i.
SubgroupEmbedding h1_lambda_cm_types(const NormTorusDatum& d,
                                     const std::vector<std::vector<char>>* flips = nullptr);

// Product of data over G_1 x ... x G_r, each with one pair and trivial H.
NormTorusDatum product_datum(const std::vector<NormTorusDatum>& factors,
                             const std::vector<Subgroup>& extra_decomposition_groups = {});

struct ProductReport {
  NormTorusDatum product;
  std::vector<Rational> factor_tau;
  Rational formula_tau;
  TamagawaReport engine;
  std::vector<std::string> hypothesis_failures;
  bool inclusion_holds = false;  // prod H^2(Z)'(G_i) inside H^2(Z)'(G)
  bool equality_holds = false;

  bool hypotheses_hold() const { return hypothesis_failures.empty(); }
};
ProductReport product_tamagawa(const std::vector<NormTorusDatum>& factors,
                               const std::vector<Subgroup>& extra_decomposition_groups = {});

enum class ClassNumberBound { One, AtMostTwo, Unknown };

// S = {sigma : iota not in <sigma>}.
struct DensityBound {
  int s_size = 0;
  int group_order = 0;
  ClassNumberBound conclusion = ClassNumberBound::Unknown;
};
DensityBound density_bound(const FiniteGroup& g, int iota);

// Index-2 normal subgroups avoiding iota, i.e. imaginary quadratic subfields.
struct QuadraticSubfieldCount {
  int count = 0;
  ClassNumberBound conclusion = ClassNumberBound::Unknown;
};
QuadraticSubfieldCount imaginary_quadratic_count(const FiniteGroup& g, int iota);

std::string to_string(ClassNumberBound b);

}  // namespace tamagawa
