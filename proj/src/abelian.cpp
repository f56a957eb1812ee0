#include <tamagawa/abelian.hpp>
#include <tamagawa/errors.hpp>

#include <numeric>
#include <sstream>

namespace tamagawa {

FinAb::FinAb(std::vector<std::int64_t> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw DomainError("invariant factors must be at least 2", {{"factor", std::to_string(factors_[i])}});
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw DomainError("invariant factors must form a divisibility chain",
                        {{"previous", std::to_string(factors_[i - 1])}, {"next", std::to_string(factors_[i])}});
  }
}

FinAb FinAb::cyclic(std::int64_t n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  return n == 1 ? FinAb() : FinAb({n});
}

BigInt FinAb::order() const {
  BigInt r = 1;
  for (auto d : factors_) r *= to_big(d);
  return r;
}

IntVector FinAb::reduce(const IntVector& x) const {
  IntVector r(rank());
  for (Index i = 0; i < rank(); ++i) r[i] = mod_floor(x[i], factors_[i]);
  return r;
}

IntVector FinAb::reduce(const BigVector& x) const {
  IntVector r(rank());
  for (Index i = 0; i < rank(); ++i) r[i] = mod_floor(x[i], factors_[i]);
  return r;
}

std::vector<IntVector> FinAb::elements() const {
  std::vector<IntVector> out;
  IntVector x = zero();
  for (;;) {
    out.push_back(x);
    Index i = rank() - 1;
    while (i >= 0 && ++x[i] == factors_[i]) x[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::int64_t FinAb::element_order(const IntVector& x) const {
  std::int64_t ord = 1;
  for (Index i = 0; i < rank(); ++i) {
    std::int64_t v = mod_floor(x[i], factors_[i]);
    ord = lcm64(ord, factors_[i] / std::gcd(v, factors_[i]));
  }
  return ord;
}

std::string FinAb::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << "Z/" << factors_[i];
  return os.str();
}

AbHom::AbHom(FinAb domain, FinAb codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.rank() || matrix_.cols() != domain_.rank())
    throw DomainError("homomorphism matrix has the wrong shape",
                      {{"rows", std::to_string(matrix_.rows())}, {"cols", std::to_string(matrix_.cols())}});
  for (Index i = 0; i < matrix_.rows(); ++i) {
    const auto di = codomain_.factor(i);
    for (Index j = 0; j < matrix_.cols(); ++j) {
      matrix_(i, j) = mod_floor(matrix_(i, j), di);
      const __int128 killed = static_cast<__int128>(matrix_(i, j)) * domain_.factor(j);
      if (killed % di != 0)
        throw DomainError("matrix does not define a homomorphism",
                          {{"row", std::to_string(i)}, {"col", std::to_string(j)}});
    }
  }
}

AbHom AbHom::zero(const FinAb& domain, const FinAb& codomain) {
  return AbHom(domain, codomain, IntMatrix::Zero(codomain.rank(), domain.rank()));
}

AbHom AbHom::identity(const FinAb& a) { return AbHom(a, a, IntMatrix::Identity(a.rank(), a.rank())); }

IntVector AbHom::operator()(const IntVector& x) const {
  BigVector y = BigVector::Zero(codomain_.rank());
  for (Index i = 0; i < matrix_.rows(); ++i)
    for (Index j = 0; j < matrix_.cols(); ++j) y[i] += to_big(matrix_(i, j)) * to_big(x[j]);
  return codomain_.reduce(y);
}

bool AbHom::is_zero() const { return matrix_.isZero(); }

bool AbHom::is_injective() const { return kernel_of_hom(*this).group.is_trivial(); }

bool AbHom::is_surjective() const { return image_of_hom(*this).group == codomain_; }

AbHom operator*(const AbHom& g, const AbHom& f) {
  if (!(g.domain() == f.codomain())) throw DomainError("composition of incompatible homomorphisms");
  BigMatrix prod = to_big(g.matrix()) * to_big(f.matrix());
  IntMatrix m(prod.rows(), prod.cols());
  for (Index i = 0; i < prod.rows(); ++i)
    for (Index j = 0; j < prod.cols(); ++j) m(i, j) = mod_floor(prod(i, j), g.codomain().factor(i));
  return AbHom(f.domain(), g.codomain(), m);
}

namespace {

BigMatrix with_relations(const IntMatrix& w, const FinAb& a) {
  BigMatrix m = BigMatrix::Zero(a.rank(), w.cols() + a.rank());
  for (Index i = 0; i < a.rank(); ++i) {
    for (Index j = 0; j < w.cols(); ++j) m(i, j) = to_big(w(i, j));
    m(i, w.cols() + i) = to_big(a.factor(i));
  }
  return m;
}

IntMatrix reduce_rows(const BigMatrix& m, const FinAb& a) {
  IntMatrix r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = mod_floor(m(i, j), a.factor(i));
  return r;
}

}  // namespace

Presentation present(const BigMatrix& relations) {
  const Index m = relations.rows();
  SmithForm f = smith_normal_form(relations, SmithOptions{false});
  std::vector<Index> torsion;
  std::vector<std::int64_t> factors;
  for (Index i = 0; i < f.rank(); ++i) {
    if (f.diagonal()[i] != 1) {
      torsion.push_back(i);
      factors.push_back(to_int64(f.diagonal()[i]));
    }
  }
  Presentation p;
  p.torsion = FinAb(factors);
  p.free_rank = m - f.rank();
  p.projection = IntMatrix::Zero(Index(torsion.size()), m);
  p.lift = BigMatrix::Zero(m, Index(torsion.size()));
  for (Index c = 0; c < m; ++c) {
    BigVector e = BigVector::Zero(m);
    e[c] = 1;
    f.apply_left(e);
    for (std::size_t t = 0; t < torsion.size(); ++t) p.projection(Index(t), c) = mod_floor(e[torsion[t]], factors[t]);
  }
  for (std::size_t t = 0; t < torsion.size(); ++t) {
    BigVector e = BigVector::Zero(m);
    e[torsion[t]] = 1;
    f.apply_left_inverse(e);
    p.lift.col(Index(t)) = e;
  }
  return p;
}

QuotientMap cokernel(const IntMatrix& m) {
  Presentation p = present(to_big(m));
  if (p.free_rank != 0)
    throw DomainError("cokernel is infinite", {{"free_rank", std::to_string(p.free_rank)}});
  // Z^m is not finite; expose the projection as a map from (Z/e)^m where e is
  // the exponent, which every caller can reduce into.
  std::int64_t e = p.torsion.exponent();
  FinAb source(std::vector<std::int64_t>(std::size_t(m.rows()), e));
  if (e == 1) source = FinAb();
  if (source.is_trivial()) return {p.torsion, AbHom::zero(source, p.torsion)};
  return {p.torsion, AbHom(source, p.torsion, p.projection)};
}

SubgroupEmbedding subgroup_generated(const FinAb& a, const IntMatrix& generators) {
  if (generators.rows() != a.rank()) throw DomainError("generator matrix has the wrong number of rows");
  const Index w = generators.cols();
  BigMatrix kernel = integer_kernel(with_relations(generators, a));
  Presentation p = present(kernel.topRows(w));
  if (p.free_rank != 0) throw InternalError("subgroup of a finite group presented as infinite");
  BigMatrix image = to_big(generators) * p.lift;
  return {p.torsion, AbHom(p.torsion, a, reduce_rows(image, a))};
}

bool SubgroupEmbedding::contains(const IntVector& x) const {
  BigVector sol;
  return solve_integer(with_relations(inclusion.matrix(), inclusion.codomain()), to_big(IntMatrix(x)).col(0), sol);
}

IntVector SubgroupEmbedding::coordinates(const IntVector& x) const {
  BigVector sol;
  if (!solve_integer(with_relations(inclusion.matrix(), inclusion.codomain()), to_big(IntMatrix(x)).col(0), sol))
    throw DomainError("element is not in the subgroup");
  return group.reduce(BigVector(sol.head(group.rank())));
}

QuotientMap quotient(const FinAb& a, const IntMatrix& generators) {
  Presentation p = present(with_relations(generators, a));
  return {p.torsion, AbHom(a, p.torsion, p.projection)};
}

SubgroupEmbedding kernel_of_hom(const AbHom& f) {
  const FinAb& a = f.domain();
  BigMatrix kernel = integer_kernel(with_relations(f.matrix(), f.codomain()));
  BigMatrix top = kernel.topRows(a.rank());
  IntMatrix gens(a.rank(), top.cols());
  for (Index i = 0; i < top.rows(); ++i)
    for (Index j = 0; j < top.cols(); ++j) gens(i, j) = mod_floor(top(i, j), a.factor(i));
  return subgroup_generated(a, gens);
}

SubgroupEmbedding image_of_hom(const AbHom& f) { return subgroup_generated(f.codomain(), f.matrix()); }

QuotientMap cokernel_of_hom(const AbHom& f) { return quotient(f.codomain(), f.matrix()); }

FinAb dual_group(const FinAb& a) { return a; }

AbHom dual_hom(const AbHom& f) {
  const FinAb& a = f.domain();
  const FinAb& b = f.codomain();
  IntMatrix m(a.rank(), b.rank());
  for (Index j = 0; j < a.rank(); ++j)
    for (Index i = 0; i < b.rank(); ++i) {
      const __int128 num = static_cast<__int128>(f.matrix()(i, j)) * a.factor(j);
      m(j, i) = static_cast<std::int64_t>(num / b.factor(i));
    }
  return AbHom(b, a, m);
}

Rational pairing(const FinAb& a, const IntVector& chi, const IntVector& x) {
  Rational s = 0;
  for (Index i = 0; i < a.rank(); ++i) s += Rational(to_big(chi[i]) * to_big(x[i]), to_big(a.factor(i)));
  s.canonicalize();
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  s -= fl;
  return s;
}

SubgroupEmbedding annihilator(const FinAb& a, const IntMatrix& w) {
  SubgroupEmbedding s = subgroup_generated(a, w);
  return kernel_of_hom(dual_hom(s.inclusion));
}

DirectSum direct_sum(const std::vector<FinAb>& summands) {
  Index total = 0;
  for (const auto& s : summands) total += s.rank();
  BigMatrix rel = BigMatrix::Zero(total, total);
  Index off = 0;
  for (const auto& s : summands)
    for (Index i = 0; i < s.rank(); ++i, ++off) rel(off, off) = to_big(s.factor(i));
  Presentation p = present(rel);
  DirectSum out;
  out.group = p.torsion;
  off = 0;
  for (const auto& s : summands) {
    out.injections.emplace_back(s, p.torsion, p.projection.middleCols(off, s.rank()));
    out.projections.emplace_back(p.torsion, s, reduce_rows(p.lift.middleRows(off, s.rank()), s));
    off += s.rank();
  }
  return out;
}

AbHom combine(const std::vector<AbHom>& maps, const DirectSum& target) {
  if (maps.size() != target.injections.size()) throw DomainError("map count does not match the direct sum");
  if (maps.empty()) return AbHom::zero(FinAb(), target.group);
  BigMatrix acc = BigMatrix::Zero(target.group.rank(), maps.front().domain().rank());
  for (std::size_t k = 0; k < maps.size(); ++k) acc += to_big((target.injections[k] * maps[k]).matrix());
  return AbHom(maps.front().domain(), target.group, reduce_rows(acc, target.group));
}

AbHom codiagonal(const std::vector<AbHom>& maps, const DirectSum& source) {
  if (maps.size() != source.projections.size()) throw DomainError("map count does not match the direct sum");
  if (maps.empty()) return AbHom::zero(source.group, FinAb());
  const FinAb& c = maps.front().codomain();
  BigMatrix acc = BigMatrix::Zero(c.rank(), source.group.rank());
  for (std::size_t k = 0; k < maps.size(); ++k) acc += to_big((maps[k] * source.projections[k]).matrix());
  return AbHom(source.group, c, reduce_rows(acc, c));
}

SubgroupEmbedding torsion_subgroup(const FinAb& a, std::int64_t n) {
  return kernel_of_hom(AbHom(a, a, IntMatrix::Identity(a.rank(), a.rank()) * n));
}

FinAb operator+(const FinAb& a, const FinAb& b) { return direct_sum({a, b}).group; }

}  // namespace tamagawa
