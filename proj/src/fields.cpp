#include <tamagawa/arith.hpp>
#include <tamagawa/errors.hpp>
#include <tamagawa/fields.hpp>

#include <algorithm>

namespace tamagawa {

NormTorusDatum galois_cm_datum(const FiniteGroup& g, int iota, std::vector<Subgroup> decomposition_groups) {
  NormTorusDatum d{g, {{g.trivial(), subgroup_generated(g, {iota})}}, iota, std::move(decomposition_groups)};
  d.validate();
  return d;
}

namespace {

int residue_index(int n, std::uint64_t r) {
  const auto res = unit_residues(n);
  auto it = std::lower_bound(res.begin(), res.end(), int(r % std::uint64_t(n)));
  if (it == res.end() || *it != int(r % std::uint64_t(n))) throw InternalError("residue is not a unit");
  return int(it - res.begin());
}

// x = a mod m, x = b mod k with gcd(m, k) = 1, by search.
std::uint64_t crt(std::uint64_t a, std::uint64_t m, std::uint64_t b, std::uint64_t k) {
  for (std::uint64_t x = a % m; x < m * k; x += m)
    if (x % k == b % k) return x;
  throw InternalError("moduli are not coprime");
}

bool is_odd_prime_power(int n) {
  if (n % 2 == 0) return false;
  auto f = factorize(std::uint64_t(n));
  return f.size() == 1;
}

}  // namespace

Subgroup cyclotomic_decomposition_group(const FiniteGroup& units, int n, std::uint64_t p) {
  if (n % p != 0) return subgroup_generated(units, {residue_index(n, p)});
  int pa = 1, m = n;
  while (m % int(p) == 0) {
    m /= int(p);
    pa *= int(p);
  }
  std::vector<int> gens;
  for (int r : unit_residues(n))
    if (r % m == 1 % m) gens.push_back(residue_index(n, std::uint64_t(r)));
  if (m > 1) gens.push_back(residue_index(n, crt(p % std::uint64_t(m), std::uint64_t(m), 1, std::uint64_t(pa))));
  return subgroup_generated(units, gens);
}

FieldDatum cyclotomic(int n) {
  if (n <= 2 || n % 4 == 2)
    throw DomainError("cyclotomic datum needs n > 2 with n odd or divisible by 4", {{"n", std::to_string(n)}});
  if (n > 4 * FiniteGroup::kMaxOrder) throw DomainError("n is too large", {{"n", std::to_string(n)}});
  FiniteGroup g = units_mod(n);
  const int iota = residue_index(n, std::uint64_t(n - 1));
  std::vector<Subgroup> decs;
  for (const auto& [p, e] : factorize(std::uint64_t(n))) decs.push_back(cyclotomic_decomposition_group(g, n, p));
  int sampled = 0;
  for (std::uint64_t p = 2; sampled < 16; ++p)
    if (is_prime_u64(p) && n % p != 0) {
      decs.push_back(cyclotomic_decomposition_group(g, n, p));
      ++sampled;
    }
  FieldDatum f{galois_cm_datum(g, iota, std::move(decs)), Rational(is_odd_prime_power(n) || n == 4 ? 1 : 2)};
  f.datum.declared_complete = true;
  return f;
}

Q8Datum q8_landau(std::uint64_t p, std::uint64_t q) {
  std::vector<std::string> failed;
  if (p == 0 || p % 2 == 0) failed.push_back("P must be odd and positive");
  if (q == 0 || q % 2 == 0) failed.push_back("Q must be odd and positive");
  const bool p_square = p > 0 && is_square(p - 1);
  if (!p_square) failed.push_back("P - 1 must be a perfect square");
  std::uint64_t b = 0;
  if (p == 0 || q == 0 || (q - 1) % p != 0 || !is_square((q - 1) / p))
    failed.push_back("Q - 1 must equal P b^2");
  else
    b = isqrt((q - 1) / p);
  if (q > 0 && is_square(q)) failed.push_back("Q must not be a perfect square");
  if (!failed.empty()) {
    ErrorContext ctx{{"P", std::to_string(p)}, {"Q", std::to_string(q)}};
    for (std::size_t i = 0; i < failed.size(); ++i) ctx["failed_" + std::to_string(i)] = failed[i];
    std::string msg = "Landau preconditions failed:";
    for (const auto& f : failed) msg += " " + f + ";";
    msg.pop_back();
    throw DomainError(msg, ctx);
  }
  Q8Datum r;
  r.p = p;
  r.q = q;
  r.a = isqrt(p - 1);
  r.b = b;
  for (const auto& [prime, e] : factorize(q)) {
    const int s = legendre(std::int64_t(p % prime), prime);
    r.legendre.push_back({prime, e, s});
    if (s == -1) r.has_nonresidue = true;
  }
  FiniteGroup g = quaternion_group();
  std::vector<Subgroup> decs;
  if (r.has_nonresidue) decs.push_back(g.whole());
  r.field = FieldDatum{galois_cm_datum(g, 1, std::move(decs)), r.has_nonresidue ? Rational(2) : Rational(1, 2)};
  r.field.datum.declared_complete = true;
  return r;
}

std::optional<int> dihedral_parameter(const FiniteGroup& g, int* rotation, int* reflection) {
  const int n = g.order() / 2;
  if (g.order() % 2 != 0 || n < 3) return std::nullopt;
  for (int r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != n) continue;
    const Subgroup rot = subgroup_generated(g, {r});
    for (int s = 0; s < g.order(); ++s)
      if (!rot.contains(s) && g.element_order(s) == 2 && g.conj(r, s) == g.inv(r)) {
        if (rotation) *rotation = r;
        if (reflection) *reflection = s;
        return n;
      }
  }
  return std::nullopt;
}

DihedralReport dihedral_cm(int n) {
  if (n <= 0 || n % 2 != 0)
    throw DomainError("dihedral CM datum needs even n: for odd n the center is trivial and has no involution",
                      {{"n", std::to_string(n)}});
  FiniteGroup g = dihedral_group(n);
  DihedralReport r;
  r.n = n;
  r.datum = galois_cm_datum(g, n / 2);
  r.density = density_bound(g, n / 2);
  r.structural_tau = r.density.conclusion == ClassNumberBound::One ? 2 : 0;  // 0: undetermined
  r.engine_tau = tamagawa_number(r.datum).tau;
  return r;
}

std::optional<Subgroup> iota_complement(const FiniteGroup& g, int iota) {
  for (const auto& m : index_two_subgroups(g))
    if (!m.contains(iota)) return m;
  return std::nullopt;
}

namespace {

void check_central_involution(const FiniteGroup& g, int iota) {
  if (iota < 0 || iota >= g.order() || g.element_order(iota) != 2)
    throw DomainError("iota must have order 2", {{"iota", std::to_string(iota)}});
  if (!center(g).contains(iota)) throw DomainError("iota must be central", {{"iota", std::to_string(iota)}});
}

}  // namespace

Classification abelian_classifier(const FiniteGroup& g, int iota) {
  if (!g.is_abelian()) throw DomainError("group is not abelian");
  check_central_involution(g, iota);
  const int half = g.order() / 2;
  Classification c;
  if (half % 2 == 1) {
    c.tau = Rational(1);
    c.rule = "g odd";
    return c;
  }
  if (iota_complement(g, iota)) {
    c.tau = Rational(2);
    c.rule = "split, g even";
    return c;
  }
  c.candidates = {Rational(1), Rational(2)};
  c.engine_tau = tamagawa_number(galois_cm_datum(g, iota)).tau;
  c.rule = "non-split, g even";
  return c;
}

Classification split_classifier(const FiniteGroup& g, int iota, const std::vector<Subgroup>& decomposition_groups,
                                const CohomologyBudget& budget) {
  check_central_involution(g, iota);
  auto comp = iota_complement(g, iota);
  if (!comp) throw DomainError("iota has no complement: the sequence does not split");
  const int half = g.order() / 2;
  Classification c;
  if (half % 2 == 1) {
    c.tau = Rational(1);
    c.rule = "g odd";
    return c;
  }
  const BigInt plus_ab = abelianization(g, *comp).group.order();
  if (plus_ab % 2 == 0) {
    c.tau = Rational(2);
    c.rule = "g even, G+ab even";
    return c;
  }
  XiTest x = xi_test(galois_cm_datum(g, iota, decomposition_groups), budget);
  c.tau = x.tau;
  c.rule = std::string("g even, G+ab odd: xi ") + (x.xi_in_sha ? "restricts to zero everywhere" : "survives somewhere");
  return c;
}

}  // namespace tamagawa
