#include "datum_corpus.hpp"

#include <tamagawa/errors.hpp>
#include <tamagawa/torus.hpp>

#include <doctest.h>

using namespace tamagawa;
using testing_support::Rng;

namespace {

FiniteGroup c2() { return cyclic_group(2); }
FiniteGroup v4() { return direct_product({c2(), c2()}); }
NormTorusDatum imaginary_quadratic() { return galois_cm_datum(c2(), 1); }
NormTorusDatum two_copies() { return NormTorusDatum{c2(), {{c2().trivial(), c2().whole()}, {c2().trivial(), c2().whole()}}, 1}; }
NormTorusDatum quaternion_cm() { return galois_cm_datum(quaternion_group(), 1); }

Rational ratio(const BigInt& a, const BigInt& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

FinAb z2n(int n) { return FinAb(std::vector<std::int64_t>(std::size_t(n), 2)); }

}  // namespace

TEST_CASE("first cohomology of the norm-one lattice") {
  CHECK(h1_lambda1(imaginary_quadratic()) == z2n(1));
  CHECK(h1_lambda1(quaternion_cm()) == z2n(1));
  CHECK(h1_lambda1(two_copies()) == z2n(2));
}

TEST_CASE("first cohomology of the lattice") {
  CHECK(h1_lambda(imaginary_quadratic()).group.is_trivial());
  CHECK(h1_lambda(quaternion_cm()).group == z2n(1));
  CHECK(h1_lambda(galois_cm_datum(v4(), 3)).group == z2n(1));
}

TEST_CASE("primitive part of H^2(Z)") {
  CHECK(h2z_primitive(cyclotomic(5).datum).group.order() == 2);
  CHECK(h2z_primitive(quaternion_cm()).group.order() == 4);
  CHECK(h2z_primitive(galois_cm_datum(v4(), 3)).group.order() == 1);
}

TEST_CASE("Tate-Shafarevich group of the lattice") {
  CHECK(sha2_lambda(cyclotomic(5).datum).is_trivial());
  CHECK(sha2_lambda(quaternion_cm()) == z2n(2));
  CHECK(sha2_lambda(galois_cm_datum(quaternion_group(), 1, {quaternion_group().whole()})).is_trivial());
}

TEST_CASE("Tamagawa numbers of basic data") {
  TamagawaReport r = tamagawa_number(imaginary_quadratic());
  CHECK(r.tau == 1);
  REQUIRE(r.n_k);
  CHECK(*r.n_k == 2);
  CHECK(tamagawa_number(q8_landau(5, 181).field.datum).tau == Rational(1, 2));
  CHECK(tamagawa_number(two_copies()).tau == 2);
  CHECK(tamagawa_number(galois_cm_datum(quaternion_group(), 1, {quaternion_group().whole()})).tau == 2);
}

TEST_CASE("exact flag follows the declared completeness") {
  NormTorusDatum d = imaginary_quadratic();
  CHECK_FALSE(tamagawa_number(d).exact);
  d.declared_complete = true;
  CHECK(tamagawa_number(d).exact);
}

TEST_CASE("fast path refuses data outside its hypotheses") {
  FiniteGroup e8 = direct_product({c2(), c2(), c2()});
  NormTorusDatum noncyclic{e8, {{e8.trivial(), e8.whole()}}};
  CHECK_THROWS_AS(tamagawa_number(noncyclic), FastPathUnavailable);
  CHECK(h1_lambda(noncyclic).group.order() >= 1);
  FiniteGroup s3 = dihedral_group(3);
  NormTorusDatum nonnormal{s3, {{s3.trivial(), subgroup_generated(s3, {3})}}};
  CHECK_THROWS_AS(h2z_primitive(nonnormal), FastPathUnavailable);
}

TEST_CASE("malformed data are rejected") {
  FiniteGroup g = cyclic_group(4);
  CHECK_THROWS_AS((NormTorusDatum{g, {{g.whole(), g.trivial()}}}.validate()), ConstructionError);
  NormTorusDatum bad_iota{g, {{g.trivial(), subgroup_generated(g, {2})}}, 1};
  CHECK_THROWS_AS(bad_iota.validate(), ConstructionError);
  NormTorusDatum noncentral{dihedral_group(3), {{dihedral_group(3).trivial(), subgroup_generated(dihedral_group(3), {3})}}, 3};
  CHECK_THROWS_AS(noncentral.validate(), ConstructionError);
}

TEST_CASE("CM-type parity description") {
  CHECK(h1_lambda_cm_types(imaginary_quadratic()).group.is_trivial());
  CHECK(h1_lambda_cm_types(two_copies()).group == z2n(1));
  CHECK(h1_lambda_cm_types(quaternion_cm()).group == z2n(1));
  CHECK_THROWS_AS(h1_lambda_cm_types(NormTorusDatum{cyclic_group(3), {{cyclic_group(3).trivial(), cyclic_group(3).whole()}}}),
                  DomainError);
}

TEST_CASE("CM-type description matches the transfer description for every choice of CM types") {
  Rng rng(31);
  for (const auto& [name, d] : testing_support::datum_corpus()) {
    if (!d.is_cm()) continue;
    CAPTURE(name);
    const FinAb expected = h1_lambda(d).group;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<char>> flips;
      for (const auto& p : d.pairs) {
        std::vector<char> f;
        for (std::size_t c = 0; c < cosets(d.group, p.ntilde).size(); ++c) f.push_back(char(rng.uniform(0, 1)));
        flips.push_back(f);
      }
      REQUIRE(h1_lambda_cm_types(d, &flips).group == expected);
    }
  }
}

TEST_CASE("engine invariants on random data") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    NormTorusDatum d = testing_support::random_fast_path_datum(rng, 24);
    TamagawaReport r = tamagawa_number(d);
    BigInt n_order = 1;
    for (const auto& p : d.pairs) n_order *= relative_abelianization(d.group, p.ntilde, p.h).group.order();
    REQUIRE(r.tau == ratio(n_order, r.h2z_prime.order()));
    REQUIRE(r.sha2_lambda.order() * r.h1_lambda1.order() == r.h1_lambda.order() * r.h2z_prime.order());
    REQUIRE(r.h1_lambda1.order() == n_order);
    // Enlarging the decomposition set can only raise tau.
    NormTorusDatum bigger = d;
    bigger.decomposition_groups.push_back(d.group.whole());
    REQUIRE(tamagawa_number(bigger).tau >= r.tau);
  }
}

TEST_CASE("product formula") {
  auto p57 = product_tamagawa({cyclotomic(5).datum, cyclotomic(7).datum});
  CHECK(p57.hypotheses_hold());
  CHECK(p57.product.group.order() == 24);
  CHECK(p57.engine.tau == 1);
  CHECK(p57.formula_tau == 1);
  CHECK(p57.inclusion_holds);

  auto pq = product_tamagawa({q8_landau(5, 181).field.datum, q8_landau(17, 613).field.datum});
  CHECK(pq.hypotheses_hold());
  CHECK(pq.product.group.order() == 64);
  CHECK(pq.engine.tau == Rational(1, 4));
  CHECK(pq.formula_tau == Rational(1, 4));
  CHECK(pq.equality_holds);

  auto single = product_tamagawa({q8_landau(5, 181).field.datum});
  CHECK(single.engine.tau == tamagawa_number(q8_landau(5, 181).field.datum).tau);

  auto failing = product_tamagawa({q8_landau(5, 21).field.datum, imaginary_quadratic()});
  CHECK_FALSE(failing.hypotheses_hold());
}

TEST_CASE("products of CM data with cyclic decomposition groups multiply") {
  std::vector<NormTorusDatum> factors{imaginary_quadratic(), galois_cm_datum(cyclic_group(4), 2),
                                      galois_cm_datum(cyclic_group(6), 3), quaternion_cm(), cyclotomic(5).datum};
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) {
      if (factors[i].group.order() * factors[j].group.order() > 64) continue;
      auto r = product_tamagawa({factors[i], factors[j]});
      CAPTURE(i);
      CAPTURE(j);
      REQUIRE(r.hypotheses_hold());
      REQUIRE(r.inclusion_holds);
      REQUIRE(r.engine.tau == r.formula_tau);
    }
}

TEST_CASE("density bound") {
  auto count_s = [](const FiniteGroup& g, int iota) {
    int s = 0;
    for (int x = 0; x < g.order(); ++x) {
      bool hits = false;
      for (int k = 0, y = g.identity(); k < g.order(); ++k, y = g.mul(y, x)) hits = hits || y == iota;
      s += hits ? 0 : 1;
    }
    return s;
  };
  for (int n = 2; n <= 12; n += 2) {
    FiniteGroup d = dihedral_group(n);
    DensityBound b = density_bound(d, n / 2);
    CHECK(b.s_size == count_s(d, n / 2));
    CHECK(b.conclusion == ClassNumberBound::One);
  }
  CHECK(density_bound(dihedral_group(6), 3).s_size == 9);
  DensityBound z2 = density_bound(c2(), 1);
  CHECK(z2.s_size == 1);
  CHECK(z2.conclusion == ClassNumberBound::AtMostTwo);
  CHECK(density_bound(quaternion_group(), 1).conclusion == ClassNumberBound::Unknown);
}

TEST_CASE("imaginary quadratic subfields") {
  auto v = imaginary_quadratic_count(v4(), 3);
  CHECK(v.count == 2);
  CHECK(v.conclusion == ClassNumberBound::One);
  auto z4 = imaginary_quadratic_count(cyclic_group(4), 2);
  CHECK(z4.count == 0);
  CHECK(z4.conclusion == ClassNumberBound::Unknown);
  auto z2 = imaginary_quadratic_count(c2(), 1);
  CHECK(z2.count == 1);
  CHECK(z2.conclusion == ClassNumberBound::AtMostTwo);
  // Consequences agree with the engine: two imaginary quadratic subfields force n_K = 1.
  CHECK(*tamagawa_number(galois_cm_datum(v4(), 3)).n_k == 1);
}
