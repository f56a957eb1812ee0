#include <tamagawa/errors.hpp>
#include <tamagawa/torus.hpp>

#include <algorithm>
#include <set>

namespace tamagawa {

namespace {

std::string describe(const Subgroup& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.elements().size(); ++i) out += (i ? "," : "") + std::to_string(s.elements()[i]);
  return out + "]";
}

void require_subgroup(const FiniteGroup& g, const Subgroup& s, const std::string& what) {
  if (!is_subgroup(g, s.elements())) throw ConstructionError(what + " is not a subgroup", {{"elements", describe(s)}});
}

// Everything about the global data that the engine reuses.
struct GlobalData {
  AbelianQuotient gab;
  std::vector<TransferMap> ver;  // G^ab -> N_i^ab
  DirectSum nsum;
  AbHom combined;  // G^ab -> sum N_i^ab
};

GlobalData global_data(const NormTorusDatum& d) {
  d.validate();
  GlobalData out;
  out.gab = abelianization(d.group);
  std::vector<FinAb> parts;
  for (const auto& p : d.pairs) {
    out.ver.push_back(transfer_map(d.group, d.group.whole(), p.ntilde, p.h));
    parts.push_back(out.ver.back().target.group);
  }
  out.nsum = direct_sum(parts);
  std::vector<AbHom> maps;
  for (const auto& t : out.ver) maps.push_back(t.map);
  out.combined = maps.empty() ? AbHom::zero(out.gab.group, out.nsum.group) : combine(maps, out.nsum);
  return out;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

void NormTorusDatum::validate() const {
  const FiniteGroup& g = group;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string tag = "pair " + std::to_string(i);
    require_subgroup(g, pairs[i].h, tag + " H");
    require_subgroup(g, pairs[i].ntilde, tag + " Ntilde");
    if (!pairs[i].h.is_subset_of(pairs[i].ntilde))
      throw ConstructionError("H is not contained in Ntilde", {{"pair", std::to_string(i)}});
  }
  for (std::size_t i = 0; i < decomposition_groups.size(); ++i)
    require_subgroup(g, decomposition_groups[i], "decomposition group " + std::to_string(i));
  if (iota) {
    const int t = *iota;
    if (t < 0 || t >= g.order()) throw ConstructionError("iota is not an element", {{"iota", std::to_string(t)}});
    if (g.element_order(t) != 2) throw ConstructionError("iota must have order 2", {{"iota", std::to_string(t)}});
    if (!center(g).contains(t)) throw ConstructionError("iota must be central", {{"iota", std::to_string(t)}});
  }
}

bool NormTorusDatum::cyclic_n() const {
  for (const auto& p : pairs) {
    if (!is_normal_in(group, p.h, p.ntilde)) return false;
    AbelianQuotient q = relative_abelianization(group, p.ntilde, p.h);
    if (!q.group.is_cyclic() || q.group.order() != p.ntilde.order() / p.h.order()) return false;
  }
  return true;
}

bool NormTorusDatum::normal_ntilde() const {
  for (const auto& p : pairs)
    if (!is_normal(group, p.ntilde)) return false;
  return true;
}

bool NormTorusDatum::is_cm() const {
  if (!iota) return false;
  for (const auto& p : pairs) {
    if (p.h.contains(*iota)) return false;
    if (!(join(group, p.h, subgroup_generated(group, {*iota})) == p.ntilde)) return false;
  }
  return true;
}

std::vector<Subgroup> NormTorusDatum::effective_decomposition_groups() const {
  std::vector<Subgroup> all = decomposition_groups;
  if (include_all_cyclic) {
    auto cyc = cyclic_subgroups(group);
    all.insert(all.end(), cyc.begin(), cyc.end());
  }
  if (iota) all.push_back(subgroup_generated(group, {*iota}));
  return dedupe_up_to_conjugacy(group, all);
}

FinAb h1_lambda1(const NormTorusDatum& d) {
  d.validate();
  std::vector<FinAb> parts;
  for (const auto& p : d.pairs) parts.push_back(relative_abelianization(d.group, p.ntilde, p.h).group);
  return dual_group(direct_sum(parts).group);
}

SubgroupEmbedding h1_lambda(const NormTorusDatum& d) { return kernel_of_hom(dual_hom(global_data(d).combined)); }

namespace {

SubgroupEmbedding h2z_from(const NormTorusDatum& d, const GlobalData& gd) {
  if (!d.cyclic_n())
    throw FastPathUnavailable("some Ntilde_i/H_i is not cyclic; use the lattice oracle");
  if (!d.normal_ntilde()) throw FastPathUnavailable("some Ntilde_i is not normal in G; use the lattice oracle");
  const FiniteGroup& g = d.group;
  std::vector<IntVector> w;
  for (const Subgroup& dec : d.effective_decomposition_groups()) {
    std::vector<AbHom> maps;
    std::vector<FinAb> parts;
    AbelianQuotient dab;
    bool have_dab = false;
    for (const auto& p : d.pairs) {
      Subgroup di = intersect(dec, p.ntilde);
      // Each double coset D x Ntilde sees H through its conjugate xHx^-1.
      std::vector<Subgroup> seen;
      for (const auto& coset : cosets(g, p.ntilde)) {
        Subgroup hx = intersect(di, conjugate(g, p.h, coset.front()));
        if (std::find(seen.begin(), seen.end(), hx) != seen.end()) continue;
        seen.push_back(hx);
        TransferMap t = transfer_map(g, dec, di, hx);
        if (!have_dab) {
          dab = t.source;
          have_dab = true;
        }
        maps.push_back(t.map);
        parts.push_back(t.target.group);
      }
    }
    if (!have_dab) dab = abelianization(g, dec);
    SubgroupEmbedding ker = maps.empty() ? SubgroupEmbedding{dab.group, AbHom::identity(dab.group)}
                                         : kernel_of_hom(combine(maps, direct_sum(parts)));
    AbHom to_g = induced_inclusion(dab, gd.gab) * ker.inclusion;
    for (Index c = 0; c < to_g.domain().rank(); ++c) w.push_back(to_g.matrix().col(c));
  }
  IntMatrix wm(gd.gab.group.rank(), Index(w.size()));
  for (std::size_t c = 0; c < w.size(); ++c) wm.col(Index(c)) = w[c];
  return annihilator(gd.gab.group, wm);
}

FinAb sha2_from(const GlobalData& gd, const SubgroupEmbedding& h2z) {
  SubgroupEmbedding im = image_of_hom(dual_hom(gd.combined));
  IntMatrix coords(h2z.group.rank(), im.group.rank());
  for (Index c = 0; c < im.group.rank(); ++c) {
    IntVector v = im.inclusion.matrix().col(c);
    if (!h2z.contains(v)) throw InternalError("image of the dual transfer is not inside H^2(Z)'");
    coords.col(c) = h2z.coordinates(v);
  }
  return quotient(h2z.group, coords).group;
}

}  // namespace

SubgroupEmbedding h2z_primitive(const NormTorusDatum& d) { return h2z_from(d, global_data(d)); }

FinAb sha2_lambda(const NormTorusDatum& d) {
  GlobalData gd = global_data(d);
  return sha2_from(gd, h2z_from(d, gd));
}

TamagawaReport tamagawa_number(const NormTorusDatum& d) {
  GlobalData gd = global_data(d);
  TamagawaReport r;
  r.h1_lambda1 = dual_group(gd.nsum.group);
  r.h1_lambda = kernel_of_hom(dual_hom(gd.combined)).group;
  SubgroupEmbedding h2z = h2z_from(d, gd);
  r.h2z_prime = h2z.group;
  r.sha2_lambda = sha2_from(gd, h2z);
  BigInt n_order = 1;
  for (const auto& t : gd.ver) n_order *= t.target.group.order();
  r.tau = ratio(n_order, r.h2z_prime.order());
  if (d.is_cm()) r.n_k = r.h2z_prime.order();
  r.exact = d.declared_complete;
  r.decomposition_groups = d.effective_decomposition_groups();
  if (r.sha2_lambda.order() * r.h1_lambda1.order() != r.h1_lambda.order() * r.h2z_prime.order())
    throw InternalError("four-term sequence orders do not multiply out");
  return r;
}

SubgroupEmbedding h1_lambda_cm_types(const NormTorusDatum& d, const std::vector<std::vector<char>>* flips) {
  d.validate();
  if (!d.is_cm()) throw DomainError("CM-type description needs CM data");
  const FiniteGroup& g = d.group;
  const int n = g.order();
  const Index r = Index(d.pairs.size());
  FinAb signs(std::vector<std::int64_t>(std::size_t(r), 2));
  FinAb parities(std::vector<std::int64_t>(std::size_t(n), 2));
  IntMatrix m = IntMatrix::Zero(n, r);
  for (Index i = 0; i < r; ++i) {
    const auto& p = d.pairs[std::size_t(i)];
    auto hc = cosets(g, p.h);
    auto nc = cosets(g, p.ntilde);
    std::vector<int> hcoset_of(n, -1);
    for (std::size_t c = 0; c < hc.size(); ++c)
      for (int x : hc[c]) hcoset_of[x] = int(c);
    std::vector<char> in_type(hc.size(), 0);
    for (std::size_t c = 0; c < nc.size(); ++c) {
      int chosen = nc[c].front();
      if (flips && (*flips)[std::size_t(i)][c]) chosen = g.mul(chosen, *d.iota);
      in_type[hcoset_of[chosen]] = 1;
    }
    for (int x = 0; x < n; ++x) {
      int moved_out = 0;
      for (std::size_t c = 0; c < hc.size(); ++c)
        if (in_type[c] && !in_type[hcoset_of[g.mul(x, hc[c].front())]]) ++moved_out;
      m(x, i) = moved_out % 2;
    }
  }
  if (r == 0) return {FinAb(), AbHom::zero(FinAb(), FinAb())};
  return kernel_of_hom(AbHom(signs, parities, m));
}

NormTorusDatum product_datum(const std::vector<NormTorusDatum>& factors, const std::vector<Subgroup>& extras) {
  if (factors.empty()) throw DomainError("product needs at least one factor");
  std::vector<FiniteGroup> groups;
  std::vector<int> orders;
  bool all_iota = true;
  for (const auto& f : factors) {
    f.validate();
    if (f.pairs.size() != 1 || f.pairs[0].h.order() != 1)
      throw DomainError("each product factor must be one Galois pair with trivial H");
    groups.push_back(f.group);
    orders.push_back(f.group.order());
    all_iota = all_iota && f.iota.has_value();
  }
  NormTorusDatum out;
  out.group = direct_product(groups);
  const int n = out.group.order();
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<int> h, nt;
    for (int x = 0; x < n; ++x) {
      auto c = product_coordinates(orders, x);
      if (c[k] == factors[k].group.identity()) h.push_back(x);
      if (factors[k].pairs[0].ntilde.contains(c[k])) nt.push_back(x);
    }
    out.pairs.push_back({Subgroup(h), Subgroup(nt)});
  }
  if (all_iota) {
    std::vector<int> c;
    for (const auto& f : factors) c.push_back(*f.iota);
    out.iota = product_index(orders, c);
  }
  out.decomposition_groups = extras;
  out.include_all_cyclic = true;
  out.declared_complete = false;
  return out;
}

ProductReport product_tamagawa(const std::vector<NormTorusDatum>& factors, const std::vector<Subgroup>& extras) {
  ProductReport rep;
  rep.product = product_datum(factors, extras);
  rep.formula_tau = 1;
  std::vector<int> orders;
  for (const auto& f : factors) orders.push_back(f.group.order());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    const std::string tag = "factor " + std::to_string(k);
    if (!f.cyclic_n()) rep.hypothesis_failures.push_back(tag + ": N is not cyclic");
    for (const auto& dec : f.effective_decomposition_groups())
      if (!is_cyclic(f.group, dec)) {
        rep.hypothesis_failures.push_back(tag + ": non-cyclic decomposition group " + describe(dec));
        break;
      }
    rep.factor_tau.push_back(tamagawa_number(f).tau);
    rep.formula_tau *= rep.factor_tau.back();
  }
  GlobalData gd = global_data(rep.product);
  SubgroupEmbedding h2z = h2z_from(rep.product, gd);
  rep.engine = tamagawa_number(rep.product);

  // Pull each factor's H^2(Z)' back along the projection G -> G_k.
  rep.inclusion_holds = true;
  std::vector<IntVector> gens;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    AbelianQuotient fab = abelianization(factors[k].group);
    IntMatrix pm(fab.group.rank(), gd.gab.group.rank());
    for (Index t = 0; t < gd.gab.group.rank(); ++t)
      pm.col(t) = fab.image(product_coordinates(orders, gd.gab.generator_lifts[t])[k]);
    AbHom pull = dual_hom(AbHom(gd.gab.group, fab.group, pm));
    SubgroupEmbedding fk = h2z_primitive(factors[k]);
    AbHom composite = pull * fk.inclusion;
    for (Index c = 0; c < composite.domain().rank(); ++c) {
      IntVector v = composite.matrix().col(c);
      gens.push_back(v);
      if (!h2z.contains(v)) rep.inclusion_holds = false;
    }
  }
  IntMatrix gm(gd.gab.group.rank(), Index(gens.size()));
  for (std::size_t c = 0; c < gens.size(); ++c) gm.col(Index(c)) = gens[c];
  rep.equality_holds = rep.inclusion_holds && subgroup_generated(gd.gab.group, gm).group.order() == h2z.group.order();
  return rep;
}

DensityBound density_bound(const FiniteGroup& g, int iota) {
  if (iota < 0 || iota >= g.order() || g.element_order(iota) != 2) throw DomainError("iota must have order 2");
  DensityBound b;
  b.group_order = g.order();
  for (int x = 0; x < g.order(); ++x)
    if (!subgroup_generated(g, {x}).contains(iota)) ++b.s_size;
  if (2 * b.s_size > g.order())
    b.conclusion = ClassNumberBound::One;
  else if (2 * b.s_size == g.order())
    b.conclusion = ClassNumberBound::AtMostTwo;
  return b;
}

QuadraticSubfieldCount imaginary_quadratic_count(const FiniteGroup& g, int iota) {
  if (iota < 0 || iota >= g.order() || g.element_order(iota) != 2) throw DomainError("iota must have order 2");
  QuadraticSubfieldCount q;
  for (const auto& s : index_two_subgroups(g))
    if (!s.contains(iota)) ++q.count;
  if (q.count >= 2)
    q.conclusion = ClassNumberBound::One;
  else if (q.count == 1)
    q.conclusion = ClassNumberBound::AtMostTwo;
  return q;
}

std::string to_string(ClassNumberBound b) {
  switch (b) {
    case ClassNumberBound::One:
      return "n_K = 1";
    case ClassNumberBound::AtMostTwo:
      return "n_K <= 2";
    default:
      return "no information";
  }
}

}  // namespace tamagawa
