#pragma once

#include <tamagawa/torus.hpp>

#include <string>
#include <vector>

namespace tamagawa {

// Free Z-module of finite rank with a left action; action[g] is the matrix of g.
struct GLattice {
  int rank = 0;
  std::vector<IntMatrix> action;

  static GLattice trivial(const FiniteGroup& g, int rank = 1);
  // Z[G/H] on the left cosets of H, in the order returned by cosets().
  static GLattice permutation(const FiniteGroup& g, const Subgroup& h);

  // Checks action[e] = 1 and action[ab] = action[a] action[b].
  bool is_action(const FiniteGroup& g) const;
};

GLattice direct_sum(const std::vector<GLattice>& parts);

// M / S for a G-stable saturated sublattice S spanned by columns of `sub`.
struct LatticeQuotient {
  GLattice lattice;
  IntMatrix projection;  // quotient.rank x m.rank
  IntMatrix lift;        // m.rank x quotient.rank, projection * lift = 1
};
LatticeQuotient quotient_lattice(const FiniteGroup& g, const GLattice& m, const IntMatrix& sub);

// Character lattices of the multinorm torus and its norm-one part:
// Lambda^1 = X(T_K) / N(X(T_E)) and Lambda = X(T_K) / N(ker of the degree map),
// linked by 0 -> Z -> Lambda -> Lambda^1 -> 0.
struct CharacterLattices {
  GLattice xt_k;
  GLattice xt_e;
  GLattice lambda;
  GLattice lambda1;
  IntMatrix norm_map;           // xt_e -> xt_k
  IntMatrix degree_map;         // xt_e -> Z
  IntMatrix lambda_to_lambda1;  // lambda -> lambda1
  IntVector z_in_lambda;        // image of 1
  std::vector<LatticeQuotient> lambda1_parts;  // per pair, Z[G/H_i] / N Z[G/Ntilde_i]
};
CharacterLattices character_lattices(const NormTorusDatum& d);
// Verifies exactness of 0 -> Z -> Lambda -> Lambda^1 -> 0 and G-equivariance.
bool sequence_is_exact(const FiniteGroup& g, const CharacterLattices& c);

struct CohomologyBudget {
  int max_order_degree2 = 16;
  int max_order_degree3 = 12;
  std::int64_t max_matrix_entries = 80'000'000;
};

// Normalised bar cochains of S with values in M: C^q = maps (S - {1})^q -> M,
// with the tuple (g_1, ..., g_q) stored in mixed radix, g_1 most significant.
IntMatrix coboundary_matrix(const FiniteGroup& g, const Subgroup& s, const GLattice& m, int q);

// H^q(S, M). For q >= 1 the group is finite, so cocycles are the saturation of
// coboundaries and H^q is the torsion of coker(d^{q-1}).
class Cohomology {
 public:
  int degree() const { return degree_; }
  const FinAb& group() const { return group_; }
  // Rank of the invariants M^S (degree 0 only).
  Index invariant_rank() const { return invariant_rank_; }
  const Subgroup& subgroup() const { return subgroup_; }
  Index cochain_dimension() const { return cochain_dim_; }
  // One cocycle per invariant-factor generator.
  const std::vector<BigVector>& representatives() const { return representatives_; }

  // Class of a cocycle in invariant-factor coordinates; throws InternalError
  // if the vector is not a cocycle.
  IntVector classify(const BigVector& cocycle) const;
  // Restriction of a cocycle to a subgroup D, as a cochain of D.
  BigVector restrict_cochain(const BigVector& cocycle, const Subgroup& d) const;

  friend Cohomology cohomology(const FiniteGroup&, const Subgroup&, const GLattice&, int, const CohomologyBudget&);

 private:
  int degree_ = 0;
  int lattice_rank_ = 0;
  FinAb group_;
  Index invariant_rank_ = 0;
  Subgroup subgroup_;
  std::vector<int> position_;  // parent element -> index in S - {1}, or -1
  Index cochain_dim_ = 0;
  SmithForm smith_;
  std::vector<Index> torsion_rows_;
  std::vector<BigVector> representatives_;
};

Cohomology cohomology(const FiniteGroup& g, const Subgroup& s, const GLattice& m, int q,
                      const CohomologyBudget& budget = {});
inline Cohomology cohomology(const FiniteGroup& g, const GLattice& m, int q, const CohomologyBudget& budget = {}) {
  return cohomology(g, g.whole(), m, q, budget);
}

AbHom restriction(const Cohomology& from, const Cohomology& to);

// Classes restricting to zero on every listed subgroup, inside H^q(G, M).
struct ShaResult {
  Cohomology global;
  SubgroupEmbedding sha;
};
ShaResult sha(const FiniteGroup& g, const GLattice& m, int q, const std::vector<Subgroup>& decomposition_groups,
              const CohomologyBudget& budget = {});

struct OracleReport {
  FinAb h1_lambda;
  FinAb h1_lambda1;
  FinAb h2_lambda;
  FinAb h2_lambda1;
  FinAb sha2_lambda;
  FinAb sha2_lambda1;
  Index h0_lambda1_rank = 0;
  Rational tau;
  Rational tau_norm_one;  // |H^1(Lambda^1)| / |Sha^2(Lambda^1)|
};
OracleReport ono_tamagawa_oracle(const NormTorusDatum& d, const CohomologyBudget& budget = {});

// Split CM case with g even and |G^{+ab}| odd: H^2(Lambda)[2] has a unique
// nonzero class xi, and tau = 1 exactly when xi restricts to zero on every D.
struct XiTest {
  FinAb two_torsion;
  bool xi_in_sha = false;
  Rational tau;
};
XiTest xi_test(const NormTorusDatum& d, const CohomologyBudget& budget = {});

struct StructureCheck {
  std::string name;
  bool applicable = false;
  bool holds = false;
  std::string detail;
};
std::vector<StructureCheck> verify_structure(const NormTorusDatum& d, const CohomologyBudget& budget = {});

}  // namespace tamagawa
