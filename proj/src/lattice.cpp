#include <tamagawa/errors.hpp>
#include <tamagawa/lattice.hpp>

#include <numeric>
#include <sstream>

namespace tamagawa {

GLattice GLattice::trivial(const FiniteGroup& g, int rank) {
  GLattice m;
  m.rank = rank;
  m.action.assign(std::size_t(g.order()), IntMatrix::Identity(rank, rank));
  return m;
}

GLattice GLattice::permutation(const FiniteGroup& g, const Subgroup& h) {
  auto cs = cosets(g, h);
  std::vector<int> coset_of(g.order(), -1);
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (int x : cs[c]) coset_of[x] = int(c);
  GLattice m;
  m.rank = int(cs.size());
  for (int x = 0; x < g.order(); ++x) {
    IntMatrix a = IntMatrix::Zero(m.rank, m.rank);
    for (std::size_t c = 0; c < cs.size(); ++c) a(coset_of[g.mul(x, cs[c].front())], Index(c)) = 1;
    m.action.push_back(std::move(a));
  }
  return m;
}

bool GLattice::is_action(const FiniteGroup& g) const {
  if (int(action.size()) != g.order()) return false;
  if (action[g.identity()] != IntMatrix::Identity(rank, rank)) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (action[g.mul(a, b)] != action[a] * action[b]) return false;
  return true;
}

GLattice direct_sum(const std::vector<GLattice>& parts) {
  GLattice m;
  for (const auto& p : parts) m.rank += p.rank;
  const std::size_t n = parts.empty() ? 0 : parts.front().action.size();
  for (std::size_t x = 0; x < n; ++x) {
    IntMatrix a = IntMatrix::Zero(m.rank, m.rank);
    Index off = 0;
    for (const auto& p : parts) {
      a.block(off, off, p.rank, p.rank) = p.action[x];
      off += p.rank;
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

LatticeQuotient quotient_lattice(const FiniteGroup& g, const GLattice& m, const IntMatrix& sub) {
  SmithForm f = smith_normal_form(sub, SmithOptions{false});
  for (const auto& d : f.diagonal())
    if (d != 1) throw DomainError("sublattice is not saturated");
  const Index r = f.rank(), k = m.rank - r;
  BigMatrix u = f.left(), uinv = f.left_inverse();
  LatticeQuotient q;
  q.projection = to_int(u.bottomRows(k));
  q.lift = to_int(uinv.rightCols(k));
  q.lattice.rank = int(k);
  for (int x = 0; x < g.order(); ++x) {
    if (!(q.projection * m.action[x] * sub).isZero()) throw DomainError("sublattice is not stable under the action");
    q.lattice.action.push_back(q.projection * m.action[x] * q.lift);
  }
  return q;
}

namespace {

// Column c' (an H-coset) gets a 1 in the row of the Ntilde-coset containing it.
IntMatrix norm_block(const FiniteGroup& g, const TorusPair& p) {
  auto hc = cosets(g, p.h);
  auto nc = cosets(g, p.ntilde);
  std::vector<int> ncoset_of(g.order(), -1);
  for (std::size_t c = 0; c < nc.size(); ++c)
    for (int x : nc[c]) ncoset_of[x] = int(c);
  IntMatrix m = IntMatrix::Zero(Index(hc.size()), Index(nc.size()));
  for (std::size_t c = 0; c < hc.size(); ++c) m(Index(c), ncoset_of[hc[c].front()]) = 1;
  return m;
}

}  // namespace

CharacterLattices character_lattices(const NormTorusDatum& d) {
  d.validate();
  const FiniteGroup& g = d.group;
  CharacterLattices c;
  std::vector<GLattice> k_parts, e_parts;
  std::vector<IntMatrix> blocks;
  for (const auto& p : d.pairs) {
    k_parts.push_back(GLattice::permutation(g, p.h));
    e_parts.push_back(GLattice::permutation(g, p.ntilde));
    blocks.push_back(norm_block(g, p));
    c.lambda1_parts.push_back(quotient_lattice(g, k_parts.back(), blocks.back()));
  }
  c.xt_k = direct_sum(k_parts);
  c.xt_e = direct_sum(e_parts);
  if (c.xt_k.action.empty()) {
    c.xt_k = GLattice::trivial(g, 0);
    c.xt_e = GLattice::trivial(g, 0);
  }
  c.norm_map = IntMatrix::Zero(c.xt_k.rank, c.xt_e.rank);
  Index ro = 0, co = 0;
  for (const auto& b : blocks) {
    c.norm_map.block(ro, co, b.rows(), b.cols()) = b;
    ro += b.rows();
    co += b.cols();
  }
  c.degree_map = IntMatrix::Ones(1, c.xt_e.rank);
  const Index e = c.xt_e.rank;
  IntMatrix ker = IntMatrix::Zero(e, std::max<Index>(e - 1, 0));
  for (Index j = 1; j < e; ++j) {
    ker(0, j - 1) = -1;
    ker(j, j - 1) = 1;
  }
  LatticeQuotient l1 = quotient_lattice(g, c.xt_k, c.norm_map);
  LatticeQuotient l = quotient_lattice(g, c.xt_k, IntMatrix(c.norm_map * ker));
  c.lambda1 = l1.lattice;
  c.lambda = l.lattice;
  c.lambda_to_lambda1 = l1.projection * l.lift;
  c.z_in_lambda = IntVector::Zero(c.lambda.rank);
  if (e > 0) c.z_in_lambda = l.projection * c.norm_map.col(0);
  return c;
}

bool sequence_is_exact(const FiniteGroup& g, const CharacterLattices& c) {
  const IntMatrix& f = c.lambda_to_lambda1;
  if (c.lambda.rank != c.lambda1.rank + 1) return false;
  if (!(f * c.z_in_lambda).isZero()) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (c.lambda1.action[x] * f != f * c.lambda.action[x]) return false;
    if (c.lambda.action[x] * c.z_in_lambda != c.z_in_lambda) return false;
  }
  std::int64_t content = 0;
  for (Index i = 0; i < c.z_in_lambda.size(); ++i) content = std::gcd(content, c.z_in_lambda[i]);
  if (content != 1) return false;
  SmithForm s = smith_normal_form(f, SmithOptions{false});
  if (s.rank() != c.lambda1.rank) return false;
  for (const auto& d : s.diagonal())
    if (d != 1) return false;
  return true;
}

namespace {

struct CochainIndex {
  std::vector<int> elements;  // S - {1}
  std::vector<int> position;  // parent -> index or -1
};

CochainIndex cochain_index(const FiniteGroup& g, const Subgroup& s) {
  CochainIndex ci;
  ci.position.assign(std::size_t(g.order()), -1);
  for (int x : s)
    if (x != g.identity()) {
      ci.position[x] = int(ci.elements.size());
      ci.elements.push_back(x);
    }
  return ci;
}

Index ipow(Index b, int e) {
  Index r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

IntMatrix build_coboundary(const FiniteGroup& g, const CochainIndex& ci, const GLattice& m, int q) {
  const Index k = Index(ci.elements.size());
  const Index r = m.rank;
  const Index rows = ipow(k, q + 1) * r, cols = ipow(k, q) * r;
  IntMatrix d = IntMatrix::Zero(rows, cols);
  if (k == 0) return d;
  std::vector<int> t(std::size_t(q + 1), 0);  // positions in ci.elements
  auto tuple_index = [&](const std::vector<int>& v) {
    Index idx = 0;
    for (int x : v) idx = idx * k + x;
    return idx;
  };
  const IntMatrix id = IntMatrix::Identity(r, r);
  for (Index row = 0; row < ipow(k, q + 1); ++row) {
    Index rem = row;
    for (int i = q; i >= 0; --i) {
      t[i] = int(rem % k);
      rem /= k;
    }
    auto block = [&](Index col_tuple) { return d.block(row * r, col_tuple * r, r, r); };
    // g_1 . f(g_2, ..., g_{q+1})
    block(tuple_index(std::vector<int>(t.begin() + 1, t.end()))) += m.action[ci.elements[t[0]]];
    for (int i = 0; i < q; ++i) {
      const int prod = g.mul(ci.elements[t[i]], ci.elements[t[i + 1]]);
      if (prod == g.identity()) continue;
      std::vector<int> v;
      for (int j = 0; j < i; ++j) v.push_back(t[j]);
      v.push_back(ci.position[prod]);
      for (int j = i + 2; j <= q; ++j) v.push_back(t[j]);
      block(tuple_index(v)) += ((i + 1) % 2 ? -1 : 1) * id;
    }
    block(tuple_index(std::vector<int>(t.begin(), t.end() - 1))) += ((q + 1) % 2 ? -1 : 1) * id;
  }
  return d;
}

}  // namespace

IntMatrix coboundary_matrix(const FiniteGroup& g, const Subgroup& s, const GLattice& m, int q) {
  if (q < 0) throw DomainError("cochain degree must be non-negative");
  return build_coboundary(g, cochain_index(g, s), m, q);
}

Cohomology cohomology(const FiniteGroup& g, const Subgroup& s, const GLattice& m, int q,
                      const CohomologyBudget& budget) {
  if (q < 0 || q > 3) throw DomainError("cohomology degree must be 0, 1, 2 or 3", {{"q", std::to_string(q)}});
  if (int(m.action.size()) != g.order()) throw DomainError("lattice action does not match the group");
  if ((q == 2 && s.order() > budget.max_order_degree2) || (q == 3 && s.order() > budget.max_order_degree3))
    throw BudgetError("group too large for the bar-resolution oracle",
                      {{"q", std::to_string(q)},
                       {"order", std::to_string(s.order())},
                       {"max_order", std::to_string(q == 2 ? budget.max_order_degree2 : budget.max_order_degree3)}});
  CochainIndex ci = cochain_index(g, s);
  const Index k = Index(ci.elements.size());
  Cohomology h;
  h.degree_ = q;
  h.lattice_rank_ = m.rank;
  h.subgroup_ = s;
  h.position_ = ci.position;
  h.cochain_dim_ = ipow(k, q) * m.rank;
  const int from = q == 0 ? 0 : q - 1;
  const Index rows = ipow(k, from + 1) * m.rank, cols = ipow(k, from) * m.rank;
  if (double(rows) * double(cols) > double(budget.max_matrix_entries))
    throw BudgetError("coboundary matrix exceeds the entry budget",
                      {{"rows", std::to_string(rows)}, {"cols", std::to_string(cols)}});
  IntMatrix d = build_coboundary(g, ci, m, from);
  h.smith_ = smith_normal_form(d, SmithOptions{false});
  if (q == 0) {
    h.invariant_rank_ = m.rank - h.smith_.rank();
    return h;
  }
  std::vector<std::int64_t> factors;
  for (Index i = 0; i < h.smith_.rank(); ++i)
    if (h.smith_.diagonal()[i] != 1) {
      h.torsion_rows_.push_back(i);
      factors.push_back(to_int64(h.smith_.diagonal()[i]));
    }
  h.group_ = FinAb(factors);
  for (Index row : h.torsion_rows_) {
    BigVector e = BigVector::Zero(h.cochain_dim_);
    e[row] = 1;
    h.smith_.apply_left_inverse(e);
    h.representatives_.push_back(std::move(e));
  }
  return h;
}

IntVector Cohomology::classify(const BigVector& cocycle) const {
  if (degree_ == 0) return IntVector(0);
  if (cocycle.size() != cochain_dim_) throw DomainError("cochain has the wrong dimension");
  BigVector y;
  bool done = false;
  try {
    IntVector small(cocycle.size());
    for (Index i = 0; i < cocycle.size(); ++i) small[i] = IntOps<std::int64_t>::from(cocycle[i]);
    smith_.apply_left(small);
    y = to_big(IntMatrix(small)).col(0);
    done = true;
  } catch (const ArithmeticOverflow&) {
  }
  if (!done) {
    y = cocycle;
    smith_.apply_left(y);
  }
  for (Index i = smith_.rank(); i < y.size(); ++i)
    if (sgn(y[i]) != 0) throw InternalError("vector is not a cocycle");
  IntVector out(group_.rank());
  for (std::size_t t = 0; t < torsion_rows_.size(); ++t) out[Index(t)] = mod_floor(y[torsion_rows_[t]], group_.factor(Index(t)));
  return out;
}

BigVector Cohomology::restrict_cochain(const BigVector& cocycle, const Subgroup& d) const {
  if (!d.is_subset_of(subgroup_)) throw DomainError("restriction target is not a subgroup of the source");
  std::vector<int> dpos;
  for (int x : d)
    if (position_[x] >= 0) dpos.push_back(position_[x]);
  const Index k = Index(subgroup_.order() - 1), kd = Index(dpos.size()), r = lattice_rank_;
  BigVector out = BigVector::Zero(ipow(kd, degree_) * r);
  for (Index t = 0; t < ipow(kd, degree_); ++t) {
    Index rem = t, src = 0, scale = 1;
    for (int i = 0; i < degree_; ++i) {
      src += dpos[std::size_t(rem % kd)] * scale;
      rem /= kd;
      scale *= k;
    }
    for (Index c = 0; c < r; ++c) out[t * r + c] = cocycle[src * r + c];
  }
  return out;
}

AbHom restriction(const Cohomology& from, const Cohomology& to) {
  if (from.degree() != to.degree()) throw DomainError("restriction between different degrees");
  IntMatrix m(to.group().rank(), from.group().rank());
  for (Index t = 0; t < from.group().rank(); ++t)
    m.col(t) = to.classify(from.restrict_cochain(from.representatives()[std::size_t(t)], to.subgroup()));
  return AbHom(from.group(), to.group(), m);
}

ShaResult sha(const FiniteGroup& g, const GLattice& m, int q, const std::vector<Subgroup>& decs,
              const CohomologyBudget& budget) {
  Cohomology global = cohomology(g, m, q, budget);
  std::vector<AbHom> maps;
  std::vector<FinAb> targets;
  for (const auto& dec : decs) {
    Cohomology local = cohomology(g, dec, m, q, budget);
    maps.push_back(restriction(global, local));
    targets.push_back(local.group());
  }
  SubgroupEmbedding k = maps.empty() ? SubgroupEmbedding{global.group(), AbHom::identity(global.group())}
                                     : kernel_of_hom(combine(maps, direct_sum(targets)));
  return {std::move(global), std::move(k)};
}

OracleReport ono_tamagawa_oracle(const NormTorusDatum& d, const CohomologyBudget& budget) {
  CharacterLattices c = character_lattices(d);
  const FiniteGroup& g = d.group;
  const auto decs = d.effective_decomposition_groups();
  OracleReport r;
  r.h1_lambda = cohomology(g, c.lambda, 1, budget).group();
  r.h1_lambda1 = cohomology(g, c.lambda1, 1, budget).group();
  r.h0_lambda1_rank = cohomology(g, c.lambda1, 0, budget).invariant_rank();
  ShaResult s = sha(g, c.lambda, 2, decs, budget);
  r.h2_lambda = s.global.group();
  r.sha2_lambda = s.sha.group;
  ShaResult s1 = sha(g, c.lambda1, 2, decs, budget);
  r.h2_lambda1 = s1.global.group();
  r.sha2_lambda1 = s1.sha.group;
  r.tau = Rational(r.h1_lambda.order(), r.sha2_lambda.order());
  r.tau.canonicalize();
  r.tau_norm_one = Rational(r.h1_lambda1.order(), r.sha2_lambda1.order());
  r.tau_norm_one.canonicalize();
  return r;
}

XiTest xi_test(const NormTorusDatum& d, const CohomologyBudget& budget) {
  if (!d.is_cm()) throw DomainError("the xi test needs CM data");
  CharacterLattices c = character_lattices(d);
  ShaResult s = sha(d.group, c.lambda, 2, d.effective_decomposition_groups(), budget);
  SubgroupEmbedding two = torsion_subgroup(s.global.group(), 2);
  if (two.group.order() != 2)
    throw DomainError("H^2(Lambda)[2] does not have order 2", {{"two_torsion", two.group.to_string()}});
  XiTest x;
  x.two_torsion = two.group;
  x.xi_in_sha = s.sha.contains(two.inclusion.matrix().col(0));
  x.tau = x.xi_in_sha ? 1 : 2;
  return x;
}

namespace {

std::string orders(const std::vector<std::pair<std::string, BigInt>>& items) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << items[i].first << "=" << items[i].second.get_str();
  return os.str();
}

bool split_with_odd_plus_ab(const NormTorusDatum& d) {
  const FiniteGroup& g = d.group;
  const int iota = *d.iota;
  for (const auto& m : index_two_subgroups(g)) {
    if (m.contains(iota)) continue;
    const bool g_even = (g.order() / 2) % 2 == 0;
    AbelianQuotient ab = abelianization(g, m);
    return g_even && ab.group.order() % 2 != 0;
  }
  return false;
}

}  // namespace

std::vector<StructureCheck> verify_structure(const NormTorusDatum& d, const CohomologyBudget& budget) {
  const FiniteGroup& g = d.group;
  std::vector<StructureCheck> out;
  CharacterLattices c = character_lattices(d);
  out.push_back({"exact_sequence", true, sequence_is_exact(g, c),
                 "ranks Lambda=" + std::to_string(c.lambda.rank) + ", Lambda1=" + std::to_string(c.lambda1.rank)});
  OracleReport o = ono_tamagawa_oracle(d, budget);

  BigInt nprod = 1;
  for (const auto& p : d.pairs) nprod *= relative_abelianization(g, p.ntilde, p.h).group.order();
  out.push_back({"h1_lambda1_order", true, o.h1_lambda1.order() == nprod,
                 orders({{"oracle", o.h1_lambda1.order()}, {"product", nprod}})});

  FinAb engine_h1 = h1_lambda(d).group;
  out.push_back({"h1_lambda_engine", true, engine_h1 == o.h1_lambda,
                 "engine " + engine_h1.to_string() + ", oracle " + o.h1_lambda.to_string()});

  out.push_back({"h0_lambda1_vanishes", true, o.h0_lambda1_rank == 0, "rank " + std::to_string(o.h0_lambda1_rank)});

  const bool fast = d.cyclic_n() && d.normal_ntilde();
  StructureCheck four{"four_term_orders", fast, false, "needs cyclic N and normal Ntilde"};
  StructureCheck sha_match{"sha2_engine_matches", fast, false, four.detail};
  if (fast) {
    TamagawaReport e = tamagawa_number(d);
    four.holds = o.h1_lambda.order() * e.h2z_prime.order() == o.h1_lambda1.order() * o.sha2_lambda.order();
    four.detail = orders({{"H1L", o.h1_lambda.order()},
                          {"H2Z'", e.h2z_prime.order()},
                          {"H1L1", o.h1_lambda1.order()},
                          {"Sha2L", o.sha2_lambda.order()}});
    sha_match.holds = e.sha2_lambda == o.sha2_lambda && e.tau == o.tau;
    sha_match.detail = "engine " + e.sha2_lambda.to_string() + " tau " + to_string(e.tau) + ", oracle " +
                       o.sha2_lambda.to_string() + " tau " + to_string(o.tau);
  }
  out.push_back(four);
  out.push_back(sha_match);

  if (d.cyclic_n())
    out.push_back({"sha2_lambda1_vanishes", true, o.sha2_lambda1.is_trivial(), o.sha2_lambda1.to_string()});

  const bool galois = d.pairs.size() == 1 && d.pairs[0].h.order() == 1;
  out.push_back({"h2_lambda1_vanishes_galois", galois, galois && o.h2_lambda1.is_trivial(),
                 galois ? o.h2_lambda1.to_string() : "needs a single Galois factor"});

  bool coprime = d.pairs.size() >= 2;
  for (std::size_t i = 0; i < d.pairs.size() && coprime; ++i) {
    coprime = is_normal(g, d.pairs[i].h);
    for (std::size_t j = i + 1; j < d.pairs.size() && coprime; ++j)
      coprime = std::gcd(g.order() / d.pairs[i].h.order(), g.order() / d.pairs[j].h.order()) == 1;
  }
  StructureCheck cop{"h2_lambda1_coprime_product", coprime, false, "needs coprime Galois factors"};
  if (coprime) {
    std::vector<FinAb> predicted;
    for (const auto& p : d.pairs) {
      FinAb hab = abelianization(g, p.h).group;
      for (int k = 0; k + 1 < p.ntilde.order() / p.h.order(); ++k) predicted.push_back(hab);
    }
    FinAb pred = direct_sum(predicted).group;
    cop.holds = pred == o.h2_lambda1;
    cop.detail = "predicted " + pred.to_string() + ", oracle " + o.h2_lambda1.to_string();
  }
  out.push_back(cop);

  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    const auto& p = d.pairs[i];
    StructureCheck probe{"connecting_map_probe_" + std::to_string(i), false, false, "needs H_i normal in Ntilde_i"};
    if (is_normal_in(g, p.h, p.ntilde)) {
      probe.applicable = true;
      const BigInt h2 = cohomology(g, c.lambda1_parts[i].lattice, 2, budget).group().order();
      BigInt bound = 1;
      const BigInt hab = abelianization(g, p.h).group.order();
      for (int k = 0; k + 1 < p.ntilde.order() / p.h.order(); ++k) bound *= hab;
      probe.holds = h2 == bound;
      probe.detail = orders({{"H2(G,Lambda1_i)", h2}, {"Hom(H_i,Q/Z)^(a_i)", bound}}) +
                     (probe.holds ? " (orders agree)" : " (orders differ)");
    }
    out.push_back(probe);
  }

  const bool xi_case = galois && d.is_cm() && split_with_odd_plus_ab(d);
  StructureCheck xi{"xi_obstruction", xi_case, false, "needs split CM data with g even and odd G+ab"};
  if (xi_case) {
    XiTest x = xi_test(d, budget);
    xi.holds = x.tau == o.tau;
    xi.detail = std::string("xi ") + (x.xi_in_sha ? "in" : "not in") + " Sha2, tau " + to_string(x.tau) +
                ", oracle tau " + to_string(o.tau);
  }
  out.push_back(xi);
  return out;
}

}  // namespace tamagawa
