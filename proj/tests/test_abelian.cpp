#include "support.hpp"

#include <doctest.h>
#include <tamagawa/abelian.hpp>
#include <tamagawa/errors.hpp>

#include <numeric>
#include <set>

using namespace tamagawa;
using testing_support::Rng;

namespace {

BigMatrix random_matrix(Rng& rng, Index r, Index c, int bound) {
  BigMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng.uniform(-bound, bound));
  return m;
}

BigInt determinant_abs_unimodular_check(const BigMatrix& u) {
  // Fraction-free Bareiss determinant.
  const Index n = u.rows();
  if (n == 0) return 1;
  BigMatrix a = u;
  BigInt prev = 1;
  int sign = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

TEST_CASE("smith form of small fixed matrices") {
  BigMatrix m(2, 2);
  m << 2, 4, 6, 8;
  SmithForm f = smith_normal_form(m);
  REQUIRE(f.rank() == 2);
  CHECK(f.diagonal()[0] == 2);
  CHECK(f.diagonal()[1] == 4);
  CHECK((f.left() * m * f.right()) == f.diagonal_matrix());

  BigMatrix zero = BigMatrix::Zero(3, 2);
  CHECK(smith_normal_form(zero).rank() == 0);

  BigMatrix id = BigMatrix::Identity(3, 3);
  SmithForm fi = smith_normal_form(id);
  CHECK(fi.rank() == 3);
  for (auto& d : fi.diagonal()) CHECK(d == 1);

  CHECK(smith_normal_form(BigMatrix(0, 4)).rank() == 0);
  CHECK(smith_normal_form(BigMatrix(4, 0)).rank() == 0);
}

TEST_CASE("smith form properties on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = rng.uniform(0, 6), c = rng.uniform(0, 6);
    BigMatrix m = random_matrix(rng, r, c, trial < 100 ? 9 : 1000000000);
    SmithForm f = smith_normal_form(m);
    BigMatrix u = f.left(), v = f.right();
    CHECK((u * m * v) == f.diagonal_matrix());
    CHECK(abs(determinant_abs_unimodular_check(u)) == 1);
    CHECK(abs(determinant_abs_unimodular_check(v)) == 1);
    CHECK((u * f.left_inverse()) == BigMatrix::Identity(r, r));
    for (Index i = 0; i < f.rank(); ++i) {
      CHECK(f.diagonal()[i] > 0);
      if (i > 0) CHECK(mpz_divisible_p(f.diagonal()[i].get_mpz_t(), f.diagonal()[i - 1].get_mpz_t()));
    }
  }
}

TEST_CASE("overflowing input falls back to big integers") {
  BigMatrix m(2, 2);
  m(0, 0) = BigInt("123456789012345678901234567890");
  m(0, 1) = 7;
  m(1, 0) = BigInt("-98765432109876543210");
  m(1, 1) = BigInt("55555555555555555555");
  SmithForm f = smith_normal_form(m);
  CHECK(f.used_bigint());
  CHECK((f.left() * m * f.right()) == f.diagonal_matrix());
}

TEST_CASE("kernel of multiplication by two on Z/4") {
  FinAb z4({4});
  AbHom twice(z4, z4, IntMatrix::Constant(1, 1, 2));
  CHECK(kernel_of_hom(twice).group == FinAb({2}));
  CHECK(image_of_hom(twice).group == FinAb({2}));
  CHECK(cokernel_of_hom(twice).group == FinAb({2}));
}

TEST_CASE("dual of multiplication by two from Z/4 to Z/2") {
  AbHom f(FinAb({4}), FinAb({2}), IntMatrix::Constant(1, 1, 1));
  AbHom d = dual_hom(f);
  CHECK(d.domain() == FinAb({2}));
  CHECK(d.codomain() == FinAb({4}));
  CHECK(image_of_hom(d).group.order() == 2);
  CHECK(dual_hom(d) == f);
}

TEST_CASE("annihilator of the subgroup 2Z/4") {
  FinAb z4({4});
  SubgroupEmbedding ann = annihilator(z4, IntMatrix::Constant(1, 1, 2));
  CHECK(ann.group.order() == 2);
}

TEST_CASE("invalid invariant factors are rejected") {
  CHECK_THROWS_AS(FinAb({2, 3}), DomainError);
  CHECK_THROWS_AS(FinAb({1}), DomainError);
  CHECK_THROWS_AS(AbHom(FinAb({2}), FinAb({4}), IntMatrix::Constant(1, 1, 1)), DomainError);
}

TEST_CASE("direct sum of coprime cyclic groups") {
  DirectSum s = direct_sum({FinAb({2}), FinAb({3}), FinAb({4})});
  CHECK(s.group == FinAb({2, 12}));
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK((s.projections[k] * s.injections[k]) == AbHom::identity(s.injections[k].domain()));
    for (std::size_t l = 0; l < 3; ++l)
      if (l != k) CHECK((s.projections[l] * s.injections[k]).is_zero());
  }
}

namespace {

FinAb random_finab(Rng& rng) {
  std::vector<FinAb> parts;
  const int k = int(rng.uniform(0, 3));
  for (int i = 0; i < k; ++i) parts.push_back(FinAb::cyclic(rng.uniform(1, 12)));
  return direct_sum(parts).group;
}

AbHom random_hom(Rng& rng, const FinAb& a, const FinAb& b) {
  // Images of generators must be killed by the generator orders.
  IntMatrix m(b.rank(), a.rank());
  for (Index j = 0; j < a.rank(); ++j) {
    for (Index i = 0; i < b.rank(); ++i) {
      const std::int64_t g = std::gcd(a.factor(j), b.factor(i));
      m(i, j) = (b.factor(i) / g) * rng.uniform(0, g - 1);
    }
  }
  return AbHom(a, b, m);
}

// Brute-force orders of kernel and image.
std::pair<BigInt, BigInt> brute_kernel_image(const AbHom& f) {
  BigInt ker = 0;
  std::set<std::vector<std::int64_t>> img;
  for (const auto& x : f.domain().elements()) {
    IntVector y = f(x);
    if (y.isZero()) ker += 1;
    img.insert(std::vector<std::int64_t>(y.data(), y.data() + y.size()));
  }
  return {ker, BigInt(static_cast<unsigned long>(img.size()))};
}

}  // namespace

TEST_CASE("kernel and image orders multiply to the domain order") {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    FinAb a = random_finab(rng), b = random_finab(rng);
    AbHom f = random_hom(rng, a, b);
    auto ker = kernel_of_hom(f);
    auto img = image_of_hom(f);
    CHECK(ker.group.order() * img.group.order() == a.order());
    auto [bk, bi] = brute_kernel_image(f);
    CHECK(ker.group.order() == bk);
    CHECK(img.group.order() == bi);
    CHECK((f * ker.inclusion).is_zero());
    CHECK(ker.inclusion.is_injective());
    CHECK(dual_hom(dual_hom(f)) == f);
    CHECK(cokernel_of_hom(f).group.order() * img.group.order() == b.order());
  }
}

TEST_CASE("annihilator order times subgroup order equals group order") {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    FinAb a = random_finab(rng);
    const Index w = rng.uniform(0, 3);
    IntMatrix gens(a.rank(), w);
    for (Index i = 0; i < a.rank(); ++i)
      for (Index j = 0; j < w; ++j) gens(i, j) = rng.uniform(0, a.factor(i) - 1);
    auto s = subgroup_generated(a, gens);
    auto ann = annihilator(a, gens);
    CHECK(ann.group.order() * s.group.order() == a.order());
    // Every annihilating character kills every generator.
    for (Index c = 0; c < ann.group.rank(); ++c) {
      IntVector chi = ann.inclusion.matrix().col(c);
      for (Index j = 0; j < w; ++j) CHECK(pairing(a, chi, gens.col(j)) == 0);
    }
    for (Index j = 0; j < w; ++j) {
      CHECK(s.contains(gens.col(j)));
      CHECK(s.inclusion(s.coordinates(gens.col(j))) == a.reduce(IntVector(gens.col(j))));
    }
  }
}
