#include "pnc/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "pnc/gf.hpp" // is_prime

namespace pnc {

struct Group::Data {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements; // sorted by image vector
  std::unordered_map<Perm, int> index;
  std::uint64_t digest = 0;

  mutable std::once_flag class_flag;
  mutable std::vector<ConjClass> classes;
  mutable std::vector<int> elem_to_class;
  mutable long exponent = 0;

  void ensure_classes() const;
};

namespace {

std::uint64_t digest_elements(const std::vector<Perm>& elems) {
  std::uint64_t h = 1469598103934665603ull;
  for (const Perm& p : elems)
    for (int v : p.images()) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
  return h;
}

std::shared_ptr<Group::Data> make_data(std::vector<Perm> elements, std::vector<Perm> generators) {
  auto d = std::make_shared<Group::Data>();
  d->degree = elements.front().degree();
  std::sort(elements.begin(), elements.end());
  d->elements = std::move(elements);
  d->index.reserve(d->elements.size() * 2);
  for (std::size_t i = 0; i < d->elements.size(); ++i)
    d->index.emplace(d->elements[i], static_cast<int>(i));
  if (generators.empty()) {
    // Derive a short generating set so later conjugation scans stay cheap.
    std::unordered_set<Perm> have;
    have.insert(Perm(d->degree));
    for (const Perm& x : d->elements) {
      if (have.count(x)) continue;
      generators.push_back(x);
      // close `have` under the current generators
      std::vector<Perm> queue(have.begin(), have.end());
      while (!queue.empty()) {
        Perm e = queue.back();
        queue.pop_back();
        for (const Perm& s : generators) {
          Perm f = compose(e, s);
          if (have.insert(f).second) queue.push_back(f);
        }
      }
      if (have.size() == d->elements.size()) break;
    }
    if (generators.empty()) generators.push_back(Perm(d->degree)); // trivial group
  }
  d->generators = std::move(generators);
  d->digest = digest_elements(d->elements);
  return d;
}

} // namespace

Group Group::generate(std::vector<Perm> generators, std::size_t bound) {
  if (generators.empty()) throw std::domain_error("Group: empty generator list");
  int deg = generators.front().degree();
  for (const Perm& g : generators)
    if (g.degree() != deg) throw std::domain_error("Group: generator degree mismatch");

  std::unordered_set<Perm> seen;
  std::vector<Perm> elems;
  std::vector<Perm> queue;
  Perm id(deg);
  seen.insert(id);
  elems.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm e = std::move(queue.back());
    queue.pop_back();
    for (const Perm& g : generators) {
      Perm f = compose(e, g);
      if (seen.insert(f).second) {
        if (seen.size() > bound)
          throw BoundExceeded("group closure exceeds bound " + std::to_string(bound));
        elems.push_back(f);
        queue.push_back(f);
      }
    }
  }
  auto d = make_data(std::move(elems), std::move(generators));
  return Group(std::move(d));
}

Group Group::from_elements(std::vector<Perm> elements, std::vector<Perm> generators) {
  if (elements.empty()) throw std::domain_error("Group: empty element set");
  return Group(make_data(std::move(elements), std::move(generators)));
}

Group Group::trivial(int degree) { return from_elements({Perm(degree)}, {Perm(degree)}); }

const Group::Data& Group::data() const {
  if (!d_) throw std::logic_error("Group: empty handle");
  return *d_;
}

int Group::degree() const { return data().degree; }
std::size_t Group::order() const { return data().elements.size(); }
const std::vector<Perm>& Group::elements() const& { return data().elements; }
const std::vector<Perm>& Group::generators() const& { return data().generators; }
std::uint64_t Group::element_digest() const { return data().digest; }

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree()) return false;
  return data().index.count(p) > 0;
}

int Group::index_of(const Perm& p) const {
  auto it = data().index.find(p);
  return it == data().index.end() ? -1 : it->second;
}

bool Group::is_subgroup_of(const Group& g) const {
  if (degree() != g.degree() || order() > g.order()) return false;
  for (const Perm& e : elements())
    if (!g.contains(e)) return false;
  return true;
}

bool Group::same_elements(const Group& g) const {
  return degree() == g.degree() && order() == g.order() && elements() == g.elements();
}

void Group::Data::ensure_classes() const {
  std::call_once(class_flag, [this] {
    std::vector<int> cls(elements.size(), -1);
    std::vector<ConjClass> out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (cls[i] != -1) continue;
      // conjugation orbit of elements[i]
      std::vector<Perm> members;
      std::vector<Perm> queue;
      cls[i] = -2;
      members.push_back(elements[i]);
      queue.push_back(elements[i]);
      while (!queue.empty()) {
        Perm x = std::move(queue.back());
        queue.pop_back();
        for (const Perm& s : generators) {
          Perm y = conjugate(x, s);
          int yi = index.at(y);
          if (cls[static_cast<std::size_t>(yi)] == -1) {
            cls[static_cast<std::size_t>(yi)] = -2;
            members.push_back(y);
            queue.push_back(y);
          }
        }
      }
      std::sort(members.begin(), members.end());
      ConjClass c;
      c.representative = members.front();
      c.members = std::move(members);
      out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
      if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
      return a.representative < b.representative;
    });
    elem_to_class.assign(elements.size(), -1);
    for (std::size_t c = 0; c < out.size(); ++c)
      for (const Perm& m : out[c].members)
        elem_to_class[static_cast<std::size_t>(index.at(m))] = static_cast<int>(c);
    long ex = 1;
    for (const auto& c : out) ex = std::lcm(ex, c.representative.order());
    classes = std::move(out);
    exponent = ex;
  });
}

const std::vector<ConjClass>& Group::classes() const& {
  data().ensure_classes();
  return data().classes;
}

int Group::class_of(const Perm& p) const {
  data().ensure_classes();
  int i = index_of(p);
  if (i < 0) throw std::domain_error("Group: element not in group");
  return data().elem_to_class[static_cast<std::size_t>(i)];
}

long Group::exponent() const {
  data().ensure_classes();
  return data().exponent;
}

bool Group::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

bool Group::is_cyclic() const {
  for (const auto& c : classes())
    if (c.representative.order() == static_cast<long>(order())) return true;
  return false;
}

Group Group::center() const {
  std::vector<Perm> z;
  for (const Perm& e : elements()) {
    bool central = true;
    for (const Perm& s : generators())
      if (compose(e, s) != compose(s, e)) {
        central = false;
        break;
      }
    if (central) z.push_back(e);
  }
  return from_elements(std::move(z));
}

Group Group::derived_subgroup() const {
  std::vector<Perm> seeds;
  const auto& gens = generators();
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) seeds.push_back(c);
    }
  return normal_closure(*this, seeds);
}

std::vector<Group> Group::derived_series() const {
  std::vector<Group> series{*this};
  while (series.back().order() > 1) {
    Group next = series.back().derived_subgroup();
    if (next.order() == series.back().order()) break; // perfect group, stable
    series.push_back(std::move(next));
  }
  return series;
}

bool Group::is_solvable() const { return derived_series().back().order() == 1; }

bool Group::is_metabelian() const { return derived_subgroup().is_abelian(); }

bool Group::is_normal_in(const Group& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const Perm& s : g.generators())
    for (const Perm& x : elements())
      if (!contains(conjugate(x, s))) return false;
  return true;
}

Group Group::conjugated(const Perm& s) const {
  std::vector<Perm> elems, gens;
  elems.reserve(order());
  for (const Perm& e : elements()) elems.push_back(conjugate(e, s));
  for (const Perm& e : generators()) gens.push_back(conjugate(e, s));
  return from_elements(std::move(elems), std::move(gens));
}

int CosetDecomposition::coset_index(const Perm& g) const {
  auto it = coset_of.find(g);
  if (it == coset_of.end()) throw std::domain_error("CosetDecomposition: element not covered");
  return it->second;
}

CosetDecomposition left_cosets(const Group& g, const Group& h) {
  if (!h.is_subgroup_of(g)) throw std::domain_error("left_cosets: not a subgroup");
  CosetDecomposition out;
  out.subgroup = h;
  out.coset_of.reserve(g.order() * 2);
  for (const Perm& e : g.elements()) {
    if (out.coset_of.count(e)) continue;
    std::vector<Perm> coset;
    coset.reserve(h.order());
    for (const Perm& x : h.elements()) coset.push_back(compose(e, x));
    std::sort(coset.begin(), coset.end());
    int idx = static_cast<int>(out.cosets.size());
    for (const Perm& c : coset) out.coset_of.emplace(c, idx);
    out.representatives.push_back(coset.front());
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

Perm QuotientMap::apply(const Perm& g) const {
  std::vector<int> im(cosets.count());
  for (std::size_t i = 0; i < cosets.count(); ++i)
    im[i] = cosets.coset_index(compose(cosets.representatives[i], g));
  return Perm(std::move(im));
}

QuotientMap quotient_group(const Group& g, const Group& n) {
  if (!n.is_normal_in(g)) throw std::domain_error("quotient_group: subgroup is not normal");
  QuotientMap qm;
  qm.domain = g;
  qm.kernel = n;
  qm.cosets = left_cosets(g, n);
  std::unordered_set<Perm> seen;
  std::vector<Perm> qelems;
  for (const Perm& e : g.elements()) {
    Perm q = qm.apply(e);
    if (seen.insert(q).second) qelems.push_back(q);
  }
  std::vector<Perm> qgens;
  for (const Perm& s : g.generators()) qgens.push_back(qm.apply(s));
  qm.quotient = Group::from_elements(std::move(qelems), std::move(qgens));
  return qm;
}

Group normal_closure(const Group& g, const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  for (const Perm& s : seed)
    if (!s.is_identity()) gens.push_back(s);
  if (gens.empty()) return Group::trivial(g.degree());
  while (true) {
    Group n = Group::generate(gens, g.order());
    bool grew = false;
    for (const Perm& x : n.elements()) {
      for (const Perm& s : g.generators()) {
        Perm c = conjugate(x, s);
        if (!n.contains(c)) {
          gens.push_back(c);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) return n;
  }
}

namespace {

// Deduplicating set of subgroups keyed by element-set digest.
struct SubgroupSet {
  std::unordered_map<std::uint64_t, std::vector<Group>> by_digest;
  std::size_t count = 0;

  bool insert(const Group& g) {
    auto& v = by_digest[g.element_digest()];
    for (const Group& h : v)
      if (h.same_elements(g)) return false;
    v.push_back(g);
    ++count;
    return true;
  }

  std::vector<Group> values() const {
    std::vector<Group> out;
    out.reserve(count);
    for (const auto& [k, v] : by_digest) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.elements() < b.elements();
    });
    return out;
  }
};

bool contains_all(const Group& big, const Group& small) {
  if (small.order() > big.order() || big.order() % small.order() != 0) return false;
  for (const Perm& e : small.elements())
    if (!big.contains(e)) return false;
  return true;
}

} // namespace

std::vector<Group> minimal_nonabelian_subgroups(const Group& g, std::size_t bound,
                                                const Deadline& deadline) {
  if (g.order() > bound)
    throw BoundExceeded("minimal_nonabelian_subgroups: order " + std::to_string(g.order()) +
                        " exceeds bound " + std::to_string(bound));
  if (g.is_abelian()) return {};

  // Subgroups <x,y> with x ranging over class representatives only; this
  // reaches every 2-generated nonabelian subgroup up to conjugacy.
  SubgroupSet twogen;
  std::size_t pair_count = 0;
  for (const ConjClass& c : g.classes()) {
    const Perm& x = c.representative;
    if (x.is_identity()) continue;
    for (const Perm& y : g.elements()) {
      if (deadline && (++pair_count & 63u) == 0 &&
          std::chrono::steady_clock::now() > *deadline)
        throw BoundExceeded("minimal_nonabelian_subgroups: wall-clock budget exhausted");
      if (commutator(x, y).is_identity()) continue;
      twogen.insert(Group::generate({x, y}, g.order()));
    }
  }
  std::vector<Group> all2 = twogen.values(); // sorted by order

  std::vector<Group> min0;
  for (std::size_t i = 0; i < all2.size(); ++i) {
    bool has_smaller = false;
    for (std::size_t j = 0; j < i && !has_smaller; ++j)
      if (all2[j].order() < all2[i].order() && contains_all(all2[i], all2[j])) has_smaller = true;
    if (!has_smaller) min0.push_back(all2[i]);
  }

  // Close the candidates under conjugation so that every nonabelian
  // subgroup of g contains one of the returned groups, then re-filter.
  SubgroupSet closed;
  for (const Group& m : min0) {
    std::vector<Group> queue{m};
    closed.insert(m);
    while (!queue.empty()) {
      Group s = std::move(queue.back());
      queue.pop_back();
      for (const Perm& t : g.generators()) {
        Group c = s.conjugated(t);
        if (closed.insert(c)) queue.push_back(std::move(c));
      }
    }
  }
  std::vector<Group> cands = closed.values();
  std::vector<Group> result;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool has_smaller = false;
    for (std::size_t j = 0; j < cands.size() && !has_smaller; ++j)
      if (cands[j].order() < cands[i].order() && contains_all(cands[i], cands[j]))
        has_smaller = true;
    if (!has_smaller) result.push_back(cands[i]);
  }
  return result;
}

std::optional<std::vector<Group>> supersolvable_series(const Group& g) {
  if (g.order() == 1) return std::vector<Group>{g};
  for (const Perm& x : g.elements()) {
    if (x.is_identity() || !is_prime(x.order())) continue;
    Group c = Group::generate({x}, g.order());
    if (!c.is_normal_in(g)) continue;
    QuotientMap qm = quotient_group(g, c);
    auto tail = supersolvable_series(qm.quotient);
    if (!tail) return std::nullopt; // quotients of supersolvable groups are supersolvable
    std::vector<Group> series;
    series.reserve(tail->size() + 1);
    for (const Group& q : *tail) {
      std::vector<Perm> pre;
      for (const Perm& e : g.elements())
        if (q.contains(qm.apply(e))) pre.push_back(e);
      series.push_back(Group::from_elements(std::move(pre)));
    }
    series.push_back(Group::trivial(g.degree()));
    return series;
  }
  return std::nullopt; // no prime-order normal subgroup
}

bool is_supersolvable(const Group& g) { return supersolvable_series(g).has_value(); }

std::optional<DihedralStructure> dihedral_structure(const Group& h) {
  std::size_t n = h.order();
  if (n < 6 || n % 2 != 0) return std::nullopt;
  long m = static_cast<long>(n / 2);
  for (const Perm& r : h.elements()) {
    if (r.order() != m) continue;
    Group rot = Group::generate({r}, n);
    Perm rinv = r.inverse();
    std::vector<Perm> reflections;
    bool ok = true;
    for (const Perm& s : h.elements()) {
      if (rot.contains(s)) continue;
      if (compose(s, s) != h.identity() || conjugate(r, s) != rinv) {
        ok = false;
        break;
      }
      reflections.push_back(s);
    }
    if (ok) return DihedralStructure{std::move(rot), std::move(reflections)};
  }
  return std::nullopt;
}

std::optional<Group> find_dihedral_subgroup(const Group& g, std::size_t order) {
  if (order < 6 || order % 2 != 0) return std::nullopt;
  long m = static_cast<long>(order / 2);
  SubgroupSet tried;
  for (const Perm& r : g.elements()) {
    if (r.order() != m) continue;
    Group rot = Group::generate({r}, g.order());
    if (!tried.insert(rot)) continue;
    Perm rinv = r.inverse();
    for (const Perm& s : g.elements()) {
      if (rot.contains(s)) continue;
      if (compose(s, s) != g.identity() || conjugate(r, s) != rinv) continue;
      Group d = Group::generate({r, s}, g.order());
      if (d.order() == order && dihedral_structure(d)) return d;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> orbits(const Group& h) {
  int n = h.degree();
  std::vector<int> orb(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (orb[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> members{i};
    std::vector<int> queue{i};
    orb[static_cast<std::size_t>(i)] = static_cast<int>(out.size());
    while (!queue.empty()) {
      int p = queue.back();
      queue.pop_back();
      for (const Perm& s : h.generators()) {
        int q = s[p];
        if (orb[static_cast<std::size_t>(q)] < 0) {
          orb[static_cast<std::size_t>(q)] = static_cast<int>(out.size());
          members.push_back(q);
          queue.push_back(q);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_transitive(const Group& h) { return orbits(h).size() == 1; }

Group point_stabilizer(const Group& h, int point) {
  if (point < 0 || point >= h.degree())
    throw std::domain_error("point_stabilizer: point out of range");
  std::vector<Perm> fix;
  for (const Perm& e : h.elements())
    if (e[point] == point) fix.push_back(e);
  return Group::from_elements(std::move(fix));
}

namespace {

bool is_prime_power_of(long n, long p) {
  if (n == 1) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

void split_abelian_p_group(const Group& p_part, std::vector<std::pair<Perm, long>>& out) {
  if (p_part.order() == 1) return;
  long best = 0;
  Perm g;
  for (const Perm& x : p_part.elements()) {
    long o = x.order();
    if (o > best) {
      best = o;
      g = x;
    }
  }
  Group cg = Group::generate({g}, p_part.order());
  out.emplace_back(g, best);

  // Greedy complement: extend B while it still meets <g> trivially. A
  // maximal such B satisfies B * <g> = P when g has maximal order.
  std::vector<Perm> bgens;
  Group b = Group::trivial(p_part.degree());
  for (const Perm& x : p_part.elements()) {
    if (b.contains(x)) continue;
    std::vector<Perm> trial = bgens;
    trial.push_back(x);
    Group t = Group::generate(trial, p_part.order());
    bool meets = false;
    for (const Perm& e : t.elements())
      if (!e.is_identity() && cg.contains(e)) {
        meets = true;
        break;
      }
    if (!meets) {
      bgens = std::move(trial);
      b = std::move(t);
    }
  }
  if (b.order() * cg.order() != p_part.order())
    throw std::logic_error("abelian_basis: complement construction failed");
  split_abelian_p_group(b, out);
}

} // namespace

std::vector<std::pair<Perm, long>> abelian_basis(const Group& a) {
  if (!a.is_abelian()) throw std::domain_error("abelian_basis: group is not abelian");
  std::vector<std::pair<Perm, long>> out;
  long n = static_cast<long>(a.order());
  for (long p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    std::vector<Perm> comp;
    for (const Perm& x : a.elements())
      if (is_prime_power_of(x.order(), p)) comp.push_back(x);
    split_abelian_p_group(Group::from_elements(std::move(comp)), out);
  }
  return out;
}

std::vector<long> abelian_invariants(const Group& a) {
  std::vector<long> inv;
  for (const auto& [g, o] : abelian_basis(a)) inv.push_back(o);
  std::sort(inv.begin(), inv.end());
  return inv;
}

std::vector<Group> all_subgroups(const Group& g, std::size_t max_subgroups) {
  SubgroupSet seen;
  std::vector<std::pair<Group, std::vector<Perm>>> queue;
  Group triv = Group::trivial(g.degree());
  seen.insert(triv);
  queue.emplace_back(triv, std::vector<Perm>{});
  std::size_t head = 0;
  while (head < queue.size()) {
    auto [s, gens] = queue[head++];
    for (const Perm& x : g.elements()) {
      if (s.contains(x)) continue;
      std::vector<Perm> ext = gens;
      ext.push_back(x);
      Group t = Group::generate(ext, g.order());
      if (seen.insert(t)) {
        if (seen.count > max_subgroups)
          throw BoundExceeded("all_subgroups: more than " + std::to_string(max_subgroups) +
                              " subgroups");
        queue.emplace_back(std::move(t), std::move(ext));
      }
    }
  }
  return seen.values();
}

} // namespace pnc
