#include "support.hpp"

#include <tamagawa/arith.hpp>
#include <tamagawa/errors.hpp>
#include <tamagawa/fields.hpp>
#include <tamagawa/lattice.hpp>

#include <doctest.h>

#include <numeric>

using namespace tamagawa;

namespace {

int euler_phi(int n) {
  int count = 0;
  for (int r = 1; r <= n; ++r) count += std::gcd(r, n) == 1 ? 1 : 0;
  return count;
}

int multiplicative_order(int x, int m) {
  if (m == 1) return 1;
  int k = 1;
  for (int y = x % m; y != 1; y = y * x % m) ++k;
  return k;
}

struct AbelianCase {
  std::string name;
  FiniteGroup group;
};

std::vector<AbelianCase> even_abelian_groups() {
  auto c = [](int n) { return cyclic_group(n); };
  std::vector<AbelianCase> out;
  for (int n : {2, 4, 6, 8, 10, 12, 14, 16}) out.push_back({"C" + std::to_string(n), c(n)});
  out.push_back({"C2xC2", direct_product({c(2), c(2)})});
  out.push_back({"C4xC2", direct_product({c(4), c(2)})});
  out.push_back({"C2^3", direct_product({c(2), c(2), c(2)})});
  out.push_back({"C6xC2", direct_product({c(6), c(2)})});
  out.push_back({"C8xC2", direct_product({c(8), c(2)})});
  out.push_back({"C4xC4", direct_product({c(4), c(4)})});
  out.push_back({"C4xC2^2", direct_product({c(4), c(2), c(2)})});
  out.push_back({"C2^4", direct_product({c(2), c(2), c(2), c(2)})});
  return out;
}

std::vector<int> involutions(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("cyclotomic decomposition groups have order e f") {
  for (int n : {5, 7, 8, 9, 12, 15, 16, 20, 21, 24}) {
    FiniteGroup g = units_mod(n);
    CHECK(g.order() == euler_phi(n));
    for (int p = 2; p < 60; ++p) {
      if (!is_prime_u64(std::uint64_t(p))) continue;
      int pa = 1, m = n;
      while (m % p == 0) {
        m /= p;
        pa *= p;
      }
      const int expected = euler_phi(pa) * multiplicative_order(p % m == 0 ? 1 : p % m, m);
      CAPTURE(n);
      CAPTURE(p);
      CHECK(cyclotomic_decomposition_group(g, n, std::uint64_t(p)).order() == expected);
    }
  }
  FiniteGroup u12 = units_mod(12);
  CHECK(cyclotomic_decomposition_group(u12, 12, 2) == u12.whole());
  CHECK(cyclotomic_decomposition_group(u12, 12, 3) == u12.whole());
}

TEST_CASE("cyclotomic data") {
  FieldDatum f = cyclotomic(12);
  CHECK(f.datum.group.order() == 4);
  REQUIRE(f.datum.iota);
  CHECK(unit_residues(12)[std::size_t(*f.datum.iota)] == 11);
  CHECK(f.datum.declared_complete);
  CHECK(f.predicted_tau == 2);
  CHECK(cyclotomic(9).predicted_tau == 1);
  CHECK(cyclotomic(4).predicted_tau == 1);
  CHECK_THROWS_AS(cyclotomic(6), DomainError);
  CHECK_THROWS_AS(cyclotomic(2), DomainError);
  CHECK_THROWS_AS(cyclotomic(1), DomainError);
}

TEST_CASE("cyclotomic engine values match the constructor prediction") {
  for (int n : {3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 28, 32, 33}) {
    CAPTURE(n);
    FieldDatum f = cyclotomic(n);
    TamagawaReport r = tamagawa_number(f.datum);
    CHECK(r.tau == f.predicted_tau);
    CHECK(r.exact);
  }
}

TEST_CASE("quaternion fields from Landau pairs") {
  Q8Datum d = q8_landau(5, 181);
  CHECK(d.a == 2);
  CHECK(d.b == 6);
  CHECK(d.field.predicted_tau == Rational(1, 2));
  CHECK_FALSE(d.has_nonresidue);
  REQUIRE(d.legendre.size() == 1);
  CHECK(d.legendre[0].prime == 181);
  CHECK(d.legendre[0].symbol == legendre(5, 181));
  CHECK(d.field.datum.group.order() == 8);
  CHECK(d.field.datum.iota == 1);

  Q8Datum e = q8_landau(5, 21);
  CHECK(e.has_nonresidue);
  CHECK(e.field.predicted_tau == 2);
  CHECK(tamagawa_number(e.field.datum).tau == 2);
  CHECK(tamagawa_number(q8_landau(17, 69).field.datum).tau == 2);
  CHECK(tamagawa_number(q8_landau(17, 613).field.datum).tau == Rational(1, 2));
}

TEST_CASE("quaternion constructor reports every failed condition") {
  try {
    q8_landau(4, 41);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.context().count("failed_0"));
    CHECK(e.context().count("failed_1"));
  }
  CHECK_THROWS_AS(q8_landau(5, 41), DomainError);
  CHECK_THROWS_AS(q8_landau(3, 13), DomainError);
  CHECK_THROWS_AS(q8_landau(5, 0), DomainError);
}

TEST_CASE("dihedral recognition") {
  for (int n = 3; n <= 12; ++n) {
    int rot = -1, refl = -1;
    auto found = dihedral_parameter(dihedral_group(n), &rot, &refl);
    REQUIRE(found);
    CHECK(*found == n);
    CHECK(dihedral_group(n).element_order(rot) == n);
    CHECK(dihedral_group(n).element_order(refl) == 2);
  }
  CHECK_FALSE(dihedral_parameter(quaternion_group()));
  CHECK_FALSE(dihedral_parameter(cyclic_group(8)));
  CHECK_FALSE(dihedral_parameter(direct_product({cyclic_group(2), cyclic_group(2), cyclic_group(2)})));
  CHECK(dihedral_parameter(testing_support::symmetric4()) == std::nullopt);
}

TEST_CASE("dihedral CM fields") {
  for (int n = 4; n <= 12; n += 2) {
    CAPTURE(n);
    DihedralReport r = dihedral_cm(n);
    CHECK(r.datum.group.order() == 2 * n);
    CHECK(r.density.s_size * 2 > r.density.group_order);
    CHECK(r.structural_tau == 2);
    CHECK(r.engine_tau == 2);
  }
  CHECK_THROWS_AS(dihedral_cm(3), DomainError);
  CHECK_THROWS_AS(dihedral_cm(7), DomainError);
}

TEST_CASE("abelian classifier agrees with the engine and the oracle") {
  for (const auto& [name, g] : even_abelian_groups()) {
    for (int iota : involutions(g)) {
      CAPTURE(name);
      CAPTURE(iota);
      Classification c = abelian_classifier(g, iota);
      NormTorusDatum d = galois_cm_datum(g, iota);
      const Rational engine = tamagawa_number(d).tau;
      if (c.tau) {
        CHECK(engine == *c.tau);
      } else {
        REQUIRE(c.engine_tau);
        CHECK(*c.engine_tau == engine);
        CHECK(std::find(c.candidates.begin(), c.candidates.end(), engine) != c.candidates.end());
      }
      if (g.order() <= 8) CHECK(ono_tamagawa_oracle(d).tau == engine);
      const bool odd_half = (g.order() / 2) % 2 == 1;
      CHECK(bool(c.tau) == (odd_half || iota_complement(g, iota).has_value()));
    }
  }
  CHECK(abelian_classifier(cyclic_group(2), 1).tau == Rational(1));
  FiniteGroup v4 = direct_product({cyclic_group(2), cyclic_group(2)});
  CHECK(abelian_classifier(v4, 3).tau == Rational(2));
  Classification z4 = abelian_classifier(cyclic_group(4), 2);
  CHECK_FALSE(z4.tau);
  CHECK(z4.candidates == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(z4.engine_tau == Rational(1));
  CHECK_THROWS_AS(abelian_classifier(quaternion_group(), 1), DomainError);
}

TEST_CASE("iota complements") {
  CHECK_FALSE(iota_complement(cyclic_group(4), 2));
  auto comp = iota_complement(cyclic_group(6), 3);
  REQUIRE(comp);
  CHECK(comp->order() == 3);
  CHECK_FALSE(comp->contains(3));
  CHECK_FALSE(iota_complement(quaternion_group(), 1));
}

TEST_CASE("split classifier") {
  auto c2 = cyclic_group(2);
  Classification odd = split_classifier(direct_product({c2, cyclic_group(3)}), 3);
  CHECK(odd.tau == Rational(1));
  Classification v4 = split_classifier(direct_product({c2, c2, c2}), 4);
  CHECK(v4.tau == Rational(2));
  // Index 12 is (1, identity) in C2 x A4 with the first factor varying slowest.
  FiniteGroup a4 = direct_product({c2, testing_support::alternating4()});
  Classification xi = split_classifier(a4, 12);
  CHECK(xi.tau == Rational(2));
  CHECK_THROWS_AS(split_classifier(quaternion_group(), 1), DomainError);
}
