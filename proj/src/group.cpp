#include <tamagawa/errors.hpp>
#include <tamagawa/group.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tamagawa {

Subgroup::Subgroup(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(int g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
  const int n = int(table.size());
  if (n < 1 || n > kMaxOrder)
    throw ConstructionError("group order out of range", {{"order", std::to_string(n)}, {"max", std::to_string(kMaxOrder)}});
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    if (int(table[a].size()) != n)
      throw ConstructionError("Cayley table row has the wrong length", {{"row", std::to_string(a)}});
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n)
        throw ConstructionError("Cayley table entry out of range", {{"row", std::to_string(a)}, {"col", std::to_string(b)}});
      if (seen[v]) throw ConstructionError("Cayley table row is not a permutation", {{"row", std::to_string(a)}});
      seen[v] = 1;
      g.table_[std::size_t(a) * n + b] = std::uint16_t(v);
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      int v = g.mul(a, b);
      if (seen[v]) throw ConstructionError("Cayley table column is not a permutation", {{"col", std::to_string(b)}});
      seen[v] = 1;
    }
  }
  g.identity_ = -1;
  for (int e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw ConstructionError("Cayley table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw ConstructionError("Cayley table is not associative",
                                  {{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"c", std::to_string(c)}});
    }
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity_) g.inverse_[a] = b;
  g.orders_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int k = 1, x = a;
    while (x != g.identity_) {
      x = g.mul(x, a);
      ++k;
    }
    g.orders_[a] = k;
  }
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  if (int(labels.size()) != n) throw ConstructionError("label count does not match the group order");
  g.labels_ = std::move(labels);
  return g;
}

int FiniteGroup::pow(int g, long long k) const {
  long long m = k % orders_[g];
  if (m < 0) m += orders_[g];
  int r = identity_;
  for (long long i = 0; i < m; ++i) r = mul(r, g);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

Subgroup FiniteGroup::whole() const {
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(all));
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(t, labels);
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw DomainError("dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) {
    const int a = x % n, e = x / n;
    std::string l = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    if (e) l += l.empty() ? "s" : " s";
    labels.push_back(l.empty() ? "1" : l);
    for (int y = 0; y < order; ++y) {
      const int b = y % n, f = y / n;
      const int k = ((e ? a - b : a + b) % n + n) % n;
      t[x][y] = k + n * ((e + f) % 2);
    }
  }
  return FiniteGroup::from_table(t, labels);
}

FiniteGroup quaternion_group() {
  // unit u in {1,i,j,k} = {0,1,2,3}; index = 2u + (negative ? 1 : 0)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      int sign = unit_sign[u][v] * ((x % 2) ? -1 : 1) * ((y % 2) ? -1 : 1);
      t[x][y] = 2 * unit_mul[u][v] + (sign < 0 ? 1 : 0);
    }
  return FiniteGroup::from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::vector<int> unit_residues(int n) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (n == 1) return {0};
  std::vector<int> res;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) res.push_back(a);
  return res;
}

FiniteGroup units_mod(int n) {
  std::vector<int> res = unit_residues(n);
  std::vector<int> pos(std::max(n, 1), -1);
  for (std::size_t i = 0; i < res.size(); ++i) pos[res[i]] = int(i);
  std::vector<std::vector<int>> t(res.size(), std::vector<int>(res.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < res.size(); ++a) {
    labels.push_back(std::to_string(res[a]));
    for (std::size_t b = 0; b < res.size(); ++b)
      t[a][b] = pos[int((static_cast<long long>(res[a]) * res[b]) % std::max(n, 1))];
  }
  return FiniteGroup::from_table(t, labels);
}

std::vector<int> product_coordinates(const std::vector<int>& orders, int index) {
  std::vector<int> c(orders.size());
  for (std::size_t i = orders.size(); i-- > 0;) {
    c[i] = index % orders[i];
    index /= orders[i];
  }
  return c;
}

int product_index(const std::vector<int>& orders, const std::vector<int>& coordinates) {
  int idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + coordinates[i];
  return idx;
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  std::vector<int> orders;
  long long total = 1;
  for (const auto& f : factors) {
    orders.push_back(f.order());
    total *= f.order();
    if (total > FiniteGroup::kMaxOrder)
      throw ConstructionError("direct product exceeds the maximum order", {{"max", std::to_string(FiniteGroup::kMaxOrder)}});
  }
  const int n = int(total);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  std::vector<std::vector<int>> coords(n);
  for (int x = 0; x < n; ++x) coords[x] = product_coordinates(orders, x);
  for (int x = 0; x < n; ++x) {
    std::string l = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) l += (i ? "," : "") + factors[i].label(coords[x][i]);
    labels.push_back(l + ")");
    for (int y = 0; y < n; ++y) {
      std::vector<int> c(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) c[i] = factors[i].mul(coords[x][i], coords[y][i]);
      t[x][y] = product_index(orders, c);
    }
  }
  return FiniteGroup::from_table(t, labels);
}

namespace {

std::string cycle_label(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == int(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
      j = std::size_t(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators, int degree) {
  if (degree < 1) throw ConstructionError("permutation degree must be positive");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    if (int(g.size()) != degree)
      throw ConstructionError("permutation has the wrong length", {{"generator", std::to_string(k)}});
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        throw ConstructionError("generator is not a permutation", {{"generator", std::to_string(k)}});
      seen[v] = 1;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> elems{id};
  std::deque<std::vector<int>> queue{id};
  auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(degree);
    for (int x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      auto nxt = compose(cur, g);
      if (elems.insert(nxt).second) {
        if (int(elems.size()) > FiniteGroup::kMaxOrder)
          throw ConstructionError("permutation group exceeds the maximum order",
                                  {{"max", std::to_string(FiniteGroup::kMaxOrder)}});
        queue.push_back(std::move(nxt));
      }
    }
  }
  std::vector<std::vector<int>> list(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = int(i);
  const int n = int(list.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(cycle_label(list[a]));
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(list[a], list[b]));
  }
  return FiniteGroup::from_table(t, labels);
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (int s : generators) {
      if (s < 0 || s >= g.order()) throw ConstructionError("element index out of range", {{"element", std::to_string(s)}});
      int x = g.mul(elems[k], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  }
  return Subgroup(std::move(elems));
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens = a.elements();
  gens.insert(gens.end(), b.begin(), b.end());
  return subgroup_generated(g, gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Subgroup(std::move(out));
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  for (int x : elements)
    if (x < 0 || x >= g.order()) return false;
  Subgroup s(elements);
  if (!s.contains(g.identity())) return false;
  for (int a : s)
    for (int b : s)
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) { return is_normal_in(g, h, g.whole()); }

bool is_normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient) {
  for (int x : ambient)
    for (int y : h)
      if (!h.contains(g.conj(y, x))) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& h) {
  for (int x : h)
    if (g.element_order(x) == h.order()) return true;
  return false;
}

std::vector<std::vector<int>> cosets(const FiniteGroup& g, const Subgroup& h, CosetSide side) {
  return cosets_in(g, g.whole(), h, side);
}

std::vector<std::vector<int>> cosets_in(const FiniteGroup& g, const Subgroup& ambient, const Subgroup& h,
                                        CosetSide side) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<int>> out;
  for (int x : ambient) {
    if (done[x]) continue;
    std::vector<int> c;
    for (int y : h) c.push_back(side == CosetSide::Left ? g.mul(x, y) : g.mul(y, x));
    std::sort(c.begin(), c.end());
    for (int z : c) done[z] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::set<int> cls;
    for (int y = 0; y < g.order(); ++y) cls.insert(g.conj(x, y));
    for (int z : cls) done[z] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

Subgroup centralizer(const FiniteGroup& g, int x) {
  std::vector<int> out;
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  return Subgroup(std::move(out));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return Subgroup(std::move(out));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : h)
      if (!h.contains(g.conj(y, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(std::move(out));
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& s) {
  std::set<int> comms;
  for (int a : s)
    for (int b : s) comms.insert(g.commutator(a, b));
  return subgroup_generated(g, std::vector<int>(comms.begin(), comms.end()));
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x) {
  std::vector<int> out;
  for (int y : h) out.push_back(g.conj(y, x));
  return Subgroup(std::move(out));
}

Subgroup conjugacy_representative(const FiniteGroup& g, const Subgroup& h) {
  Subgroup best = h;
  for (int x = 0; x < g.order(); ++x) {
    Subgroup c = conjugate(g, h, x);
    if (c.elements() < best.elements()) best = std::move(c);
  }
  return best;
}

bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate(g, a, x) == b) return true;
  return false;
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> all;
  for (int x = 0; x < g.order(); ++x) all.insert(subgroup_generated(g, {x}));
  return {all.begin(), all.end()};
}

std::vector<Subgroup> dedupe_up_to_conjugacy(const FiniteGroup& g, const std::vector<Subgroup>& subgroups) {
  std::set<Subgroup> reps;
  for (const auto& s : subgroups) reps.insert(conjugacy_representative(g, s));
  return {reps.begin(), reps.end()};
}

std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const FiniteGroup& g) {
  return dedupe_up_to_conjugacy(g, cyclic_subgroups(g));
}

Subgroup sylow(const FiniteGroup& g, int p) {
  if (p < 2) throw DomainError("Sylow prime must be at least 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw DomainError("Sylow parameter is not prime", {{"p", std::to_string(p)}});
  int target = 1, n = g.order();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  if (target == 1)
    throw DomainError("prime does not divide the group order", {{"p", std::to_string(p)}, {"order", std::to_string(g.order())}});
  Subgroup s = g.trivial();
  while (s.order() < target) {
    Subgroup norm = normalizer(g, s);
    bool grown = false;
    for (int x : norm) {
      if (s.contains(x)) continue;
      if (!s.contains(g.pow(x, p))) continue;
      s = join(g, s, subgroup_generated(g, {x}));
      grown = true;
      break;
    }
    if (!grown) throw InternalError("Sylow search stalled");
  }
  return s;
}

IntVector AbelianQuotient::image(int g) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), g);
  if (it == domain.end() || *it != g)
    throw DomainError("element outside the domain of the abelian quotient", {{"element", std::to_string(g)}});
  return images.col(it - domain.begin());
}

AbelianQuotient abelian_quotient(const FiniteGroup& g, const Subgroup& s, const Subgroup& m) {
  const int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x : s) {
    if (coset_of[x] >= 0) continue;
    const int id = int(reps.size());
    reps.push_back(x);
    for (int y : m) coset_of[g.mul(x, y)] = id;
  }
  const int q = int(reps.size());
  // Greedy generators of S modulo M.
  std::vector<int> gens;
  Subgroup cur = m;
  for (int x : s) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = join(g, cur, subgroup_generated(g, {x}));
  }
  const int k = int(gens.size());
  std::vector<std::vector<long long>> vec(q);
  std::vector<int> rep_elem(q, -1);
  std::vector<std::vector<long long>> relations;
  const int start = coset_of[g.identity()];
  vec[start].assign(k, 0);
  rep_elem[start] = g.identity();
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int j = 0; j < k; ++j) {
      const int d = coset_of[g.mul(rep_elem[c], gens[j])];
      std::vector<long long> v = vec[c];
      v[j] += 1;
      if (rep_elem[d] < 0) {
        rep_elem[d] = g.mul(rep_elem[c], gens[j]);
        vec[d] = v;
        queue.push_back(d);
      } else {
        for (int i = 0; i < k; ++i) v[i] -= vec[d][i];
        if (std::any_of(v.begin(), v.end(), [](long long t) { return t != 0; })) relations.push_back(v);
      }
    }
  }
  BigMatrix rel(k, Index(relations.size()));
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (int i = 0; i < k; ++i) rel(i, Index(r)) = BigInt(static_cast<long>(relations[r][i]));
  Presentation p = present(rel);
  if (p.free_rank != 0) throw InternalError("abelian quotient presented as infinite");
  AbelianQuotient out;
  out.group = p.torsion;
  out.domain = s;
  out.kernel = m;
  out.images = IntMatrix(p.torsion.rank(), s.order());
  std::vector<IntVector> coset_image(q);
  for (int c = 0; c < q; ++c) {
    IntVector v(k);
    for (int i = 0; i < k; ++i) v[i] = vec[c][i];
    BigVector img = to_big(IntMatrix(p.projection * v)).col(0);
    coset_image[c] = p.torsion.reduce(img);
  }
  for (int idx = 0; idx < s.order(); ++idx) out.images.col(idx) = coset_image[coset_of[s.elements()[idx]]];
  for (Index t = 0; t < p.torsion.rank(); ++t) {
    int elem = g.identity();
    for (int j = 0; j < k; ++j) {
      const long long e = mod_floor(p.lift(j, t), g.element_order(gens[j]));
      elem = g.mul(elem, g.pow(gens[j], e));
    }
    out.generator_lifts.push_back(elem);
  }
  return out;
}

AbelianQuotient abelianization(const FiniteGroup& g, const Subgroup& s) {
  return abelian_quotient(g, s, commutator_subgroup(g, s));
}

AbelianQuotient relative_abelianization(const FiniteGroup& g, const Subgroup& s, const Subgroup& k) {
  if (!k.is_subset_of(s)) throw DomainError("relative abelianization needs K inside S");
  return abelian_quotient(g, s, join(g, commutator_subgroup(g, s), k));
}

AbHom induced_inclusion(const AbelianQuotient& from, const AbelianQuotient& to) {
  IntMatrix m(to.group.rank(), from.group.rank());
  for (Index t = 0; t < from.group.rank(); ++t) m.col(t) = to.image(from.generator_lifts[t]);
  return AbHom(from.group, to.group, m);
}

std::vector<Subgroup> index_two_subgroups(const FiniteGroup& g) {
  AbelianQuotient ab = abelianization(g);
  std::vector<Index> even;
  for (Index i = 0; i < ab.group.rank(); ++i)
    if (ab.group.factor(i) % 2 == 0) even.push_back(i);
  std::vector<Subgroup> out;
  for (unsigned mask = 1; mask < (1u << even.size()); ++mask) {
    std::vector<int> ker;
    for (int idx = 0; idx < g.order(); ++idx) {
      long long s = 0;
      for (std::size_t b = 0; b < even.size(); ++b)
        if (mask & (1u << b)) s += ab.images(even[b], idx);
      if (s % 2 == 0) ker.push_back(ab.domain.elements()[idx]);
    }
    out.emplace_back(std::move(ker));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tamagawa
