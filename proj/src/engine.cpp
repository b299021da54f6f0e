#include "pnc/engine.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "pnc/catalog.hpp"
#include "pnc/gf.hpp"
#include "pnc/rng.hpp"

namespace pnc {

std::string to_string(PncStatus s) {
  switch (s) {
    case PncStatus::Pnc: return "PNC";
    case PncStatus::Spnc: return "SPNC";
    case PncStatus::NotPnc: return "NOT_PNC";
    case PncStatus::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::Exhaustive: return "EXHAUSTIVE";
    case ObstructionKind::DihedralLemma: return "DIHEDRAL_LEMMA";
    case ObstructionKind::D4Conjugacy: return "D4_CONJUGACY";
  }
  return "EXHAUSTIVE";
}

std::string ObstructionReport::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " via subgroup of order " << subgroup.order();
  switch (kind) {
    case ObstructionKind::D4Conjugacy:
      os << ": central involution " << central.cycle_string() << " is conjugate to reflection "
         << fused.cycle_string() << " by " << conjugator.cycle_string();
      break;
    case ObstructionKind::DihedralLemma:
      os << ": no irreducible is both zero on the reflections and zero-summed on the rotations";
      break;
    case ObstructionKind::Exhaustive:
      os << ": every irreducible has a commutator-subgroup coset with nonzero sum";
      break;
  }
  return os.str();
}

bool is_pnc_for_subgroup(const ClassFunction& chi, const Group& h) {
  return !pnc_failing_coset(chi, h).has_value();
}

std::optional<std::pair<Perm, Cyclotomic>> pnc_failing_coset(const ClassFunction& chi,
                                                             const Group& h) {
  if (h.is_abelian())
    throw std::domain_error("commutator criterion: subgroup must be nonabelian");
  Group k = h.derived_subgroup();
  CosetDecomposition dec = left_cosets(h, k);
  for (std::size_t i = 0; i < dec.count(); ++i) {
    Cyclotomic sum;
    for (const Perm& e : dec.cosets[i]) sum += chi.evaluate(e);
    if (!sum.is_zero()) return std::make_pair(dec.representatives[i], sum);
  }
  return std::nullopt;
}

std::vector<int> pnc_irreducibles(const CharacterTable& table, const Group& h) {
  if (h.is_abelian())
    throw std::domain_error("commutator criterion: subgroup must be nonabelian");
  Group k = h.derived_subgroup();
  CosetDecomposition dec = left_cosets(h, k);
  std::vector<int> out;
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    const ClassFunction& chi = table.irreducibles[i];
    bool pnc = true;
    for (const auto& coset : dec.cosets) {
      Cyclotomic sum;
      for (const Perm& e : coset) sum += chi.evaluate(e);
      if (!sum.is_zero()) {
        pnc = false;
        break;
      }
    }
    if (pnc) out.push_back(static_cast<int>(i));
  }
  return out;
}

PairDecision is_pnc_for_pair(const Group& g, const Perm& x, const Perm& y,
                             const EngineOptions& opts) {
  if (!g.contains(x) || !g.contains(y))
    throw std::domain_error("is_pnc_for_pair: elements outside the group");
  if (commutator(x, y).is_identity()) throw std::domain_error("pair commutes");
  if (g.order() > opts.bound)
    throw BoundExceeded("is_pnc_for_pair: group order exceeds bound");
  Group h = Group::generate({x, y}, g.order());
  auto wits = pnc_irreducibles(character_table(g), h);
  if (wits.empty()) return {false, std::nullopt};
  return {true, wits.front()};
}

namespace {

ObstructionReport exhaustive_report(const CharacterTable& table, const Group& h) {
  ObstructionReport rep;
  rep.kind = ObstructionKind::Exhaustive;
  rep.subgroup = h;
  Group k = h.derived_subgroup();
  CosetDecomposition dec = left_cosets(h, k);
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    const ClassFunction& chi = table.irreducibles[i];
    bool recorded = false;
    for (std::size_t c = 0; c < dec.count(); ++c) {
      Cyclotomic sum;
      for (const Perm& e : dec.cosets[c]) sum += chi.evaluate(e);
      if (!sum.is_zero()) {
        rep.exhaustive.push_back({static_cast<int>(i), dec.representatives[c], sum});
        recorded = true;
        break;
      }
    }
    if (!recorded) throw std::logic_error("exhaustive_report: subgroup is not an obstruction");
  }
  return rep;
}

// Partition a conjugation-closed list of subgroups into conjugacy orbits;
// returns, per input index, the orbit representative's input index.
std::vector<int> conjugacy_orbit_reps(const Group& g, const std::vector<Group>& subs) {
  std::unordered_map<std::uint64_t, std::vector<int>> by_digest;
  for (std::size_t i = 0; i < subs.size(); ++i)
    by_digest[subs[i].element_digest()].push_back(static_cast<int>(i));
  auto find_index = [&](const Group& s) -> int {
    auto it = by_digest.find(s.element_digest());
    if (it == by_digest.end()) return -1;
    for (int i : it->second)
      if (subs[static_cast<std::size_t>(i)].same_elements(s)) return i;
    return -1;
  };
  std::vector<int> rep(subs.size(), -1);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (rep[i] >= 0) continue;
    std::vector<int> queue{static_cast<int>(i)};
    rep[i] = static_cast<int>(i);
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      for (const Perm& s : g.generators()) {
        Group c = subs[static_cast<std::size_t>(cur)].conjugated(s);
        int j = find_index(c);
        if (j >= 0 && rep[static_cast<std::size_t>(j)] < 0) {
          rep[static_cast<std::size_t>(j)] = static_cast<int>(i);
          queue.push_back(j);
        }
      }
    }
  }
  return rep;
}

} // namespace

std::optional<ObstructionReport> d4_conjugacy_obstruction(
    const Group& g, const std::optional<std::pair<Perm, Perm>>& seed) {
  auto try_pair = [&](const Perm& r, const Perm& s) -> std::optional<ObstructionReport> {
    if (r.order() != 4 || s.order() != 2) return std::nullopt;
    if (conjugate(r, s) != r.inverse()) return std::nullopt;
    Perm central = compose(r, r);
    if (s == central) return std::nullopt;
    Group d = Group::generate({r, s}, g.order());
    if (d.order() != 8) return std::nullopt;
    int central_class = g.class_of(central);
    for (const Perm& t : d.elements()) {
      if (t.order() != 2 || t == central) continue;
      if (g.class_of(t) != central_class) continue;
      // find one conjugator for the transcript
      for (const Perm& w : g.elements()) {
        if (conjugate(central, w) == t) {
          ObstructionReport rep;
          rep.kind = ObstructionKind::D4Conjugacy;
          rep.subgroup = d;
          rep.central = central;
          rep.fused = t;
          rep.conjugator = w;
          return rep;
        }
      }
    }
    return std::nullopt;
  };

  if (seed && g.contains(seed->first) && g.contains(seed->second))
    if (auto rep = try_pair(seed->first, seed->second)) return rep;

  for (const Perm& r : g.elements()) {
    if (r.order() != 4) continue;
    for (const Perm& s : g.elements()) {
      if (s.order() != 2) continue;
      if (auto rep = try_pair(r, s)) return rep;
    }
  }
  return std::nullopt;
}

std::optional<ObstructionReport> dihedral_lemma_check(const Group& g, const Group& d) {
  auto ds = dihedral_structure(d);
  if (!ds) throw std::domain_error("dihedral_lemma_check: subgroup is not dihedral");
  if (!d.is_subgroup_of(g))
    throw std::domain_error("dihedral_lemma_check: not a subgroup");
  const CharacterTable& table = character_table(g);
  ObstructionReport rep;
  rep.kind = ObstructionKind::DihedralLemma;
  rep.subgroup = d;
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    const ClassFunction& chi = table.irreducibles[i];
    bool zero_refl = true;
    for (const Perm& t : ds->reflections)
      if (!chi.evaluate(t).is_zero()) {
        zero_refl = false;
        break;
      }
    Cyclotomic rot_sum;
    for (const Perm& e : ds->rotations.elements()) rot_sum += chi.evaluate(e);
    bool zero_rot = rot_sum.is_zero();
    if (zero_refl && zero_rot) return std::nullopt; // this irreducible is PNC for d
    rep.dihedral.push_back({static_cast<int>(i), zero_refl, zero_rot});
  }
  return rep;
}

PncVerdict decide_pnc(const Group& g, const EngineOptions& opts) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                           std::chrono::duration<double>(opts.budget_seconds));
  PncVerdict v;

  if (g.order() <= 5 || g.is_abelian()) {
    v.status = PncStatus::Pnc;
    v.notes.push_back("abelian group: every pair commutes, PNC vacuously");
    return v;
  }

  // Cheap certificate first: no character theory needed.
  if (auto d4 = d4_conjugacy_obstruction(g)) {
    v.status = PncStatus::NotPnc;
    v.notes.push_back(
        "order-8 dihedral subgroup whose central involution is conjugate to a reflection; no "
        "class function separates them");
    v.obstructions.push_back(std::move(*d4));
    return v;
  }

  if (g.order() > opts.bound) {
    v.status = PncStatus::Undecided;
    v.notes.push_back("order " + std::to_string(g.order()) + " exceeds the analysis bound " +
                      std::to_string(opts.bound) + " and no shortcut obstruction fired");
    return v;
  }

  const CharacterTable& table = character_table(g);
  std::vector<Group> mins;
  try {
    mins = minimal_nonabelian_subgroups(g, opts.bound, deadline);
  } catch (const BoundExceeded& e) {
    v.status = PncStatus::Undecided;
    v.notes.push_back(std::string("minimal nonabelian subgroup enumeration stopped: ") +
                      e.what());
    return v;
  }
  v.minimal_subgroups = mins;
  v.witnesses.assign(mins.size(), {});

  // The PNC property only depends on the conjugacy class of the subgroup
  // (characters are class functions), so evaluate one representative per
  // orbit, smallest subgroups first for fast failure.
  std::vector<int> rep_of = conjugacy_orbit_reps(g, mins);
  std::vector<int> orbit_reps;
  for (std::size_t i = 0; i < mins.size(); ++i)
    if (rep_of[i] == static_cast<int>(i)) orbit_reps.push_back(static_cast<int>(i));

  std::unordered_map<int, std::vector<int>> wits_of_rep;
  std::vector<int> common;
  bool first = true;
  for (int ri : orbit_reps) {
    if (clock::now() > deadline) {
      v.status = PncStatus::Undecided;
      v.notes.push_back("wall-clock budget exhausted during the minimal-subgroup scan");
      return v;
    }
    const Group& h = mins[static_cast<std::size_t>(ri)];
    std::vector<int> wits = pnc_irreducibles(table, h);
    if (wits.empty()) {
      v.status = PncStatus::NotPnc;
      v.notes.push_back("minimal nonabelian subgroup of order " + std::to_string(h.order()) +
                        " admits no PNC irreducible: every irreducible fails the coset-sum "
                        "criterion");
      v.obstructions.push_back(exhaustive_report(table, h));
      // the obstruction carries the certificate; drop the partially
      // evaluated witness map
      v.minimal_subgroups.clear();
      v.witnesses.clear();
      return v;
    }
    if (first) {
      common = wits;
      first = false;
    } else {
      std::vector<int> merged;
      std::set_intersection(common.begin(), common.end(), wits.begin(), wits.end(),
                            std::back_inserter(merged));
      common = std::move(merged);
    }
    wits_of_rep.emplace(ri, std::move(wits));
  }
  for (std::size_t i = 0; i < mins.size(); ++i)
    v.witnesses[i] = wits_of_rep.at(rep_of[i]);

  if (!common.empty()) {
    v.status = PncStatus::Spnc;
    v.common_witness = common.front();
    v.notes.push_back("irreducible #" + std::to_string(common.front()) +
                      " (degree " + std::to_string(table.degrees[static_cast<std::size_t>(common.front())]) +
                      ") is PNC for every minimal nonabelian subgroup: the group is SPNC");
  } else {
    v.status = PncStatus::Pnc;
    v.notes.push_back(
        "every minimal nonabelian subgroup has a PNC irreducible, but no single irreducible "
        "works for all of them");
  }
  return v;
}

SupersolvableWitness supersolvable_pnc_witness(const Group& g, const Perm& x, const Perm& y) {
  Perm c = commutator(x, y);
  if (c.is_identity()) throw std::domain_error("pair commutes");
  auto series = supersolvable_series(g);
  if (!series) throw std::domain_error("supersolvable_pnc_witness: group is not supersolvable");

  // locate [x,y] in G_i \ G_{i+1}
  std::size_t level = 0;
  while (level + 1 < series->size() && (*series)[level + 1].contains(c)) ++level;
  const Group& gi = (*series)[level];
  const Group& gi1 = (*series)[level + 1];

  QuotientMap qm = quotient_group(gi, gi1);
  ClassFunction faithful;
  bool found = false;
  for (const auto& lin : linear_characters(qm.quotient)) {
    if (is_faithful_linear(lin)) {
      faithful = lin;
      found = true;
      break;
    }
  }
  if (!found)
    throw std::logic_error("supersolvable_pnc_witness: cyclic quotient without faithful character");
  ClassFunction phi = pull_back(faithful, qm);
  ClassFunction induced = induce(phi, g);

  SupersolvableWitness w{induced, static_cast<int>(level), true, false};
  CosetDecomposition dec = left_cosets(g, gi);
  for (const Perm& s : dec.representatives) {
    Cyclotomic val = phi.evaluate(conjugate(c, s));
    if (val.is_zero())
      throw std::logic_error("supersolvable_pnc_witness: commutator conjugate left the level");
    if (val.is_one()) {
      w.eigenvalue_one_avoided = false;
      break;
    }
  }
  Group h = Group::generate({x, y}, g.order());
  w.coset_criterion_holds = is_pnc_for_subgroup(induced, h);
  return w;
}

std::optional<ClassFunction> cyclic_by_abelian_spnc_witness(const Group& g,
                                                            const EngineOptions& opts) {
  Group derived = g.derived_subgroup();
  for (const Perm& e : g.elements()) {
    Group c = Group::generate({e}, g.order());
    if (c.order() < derived.order()) continue;
    bool contains_derived = true;
    for (const Perm& d : derived.elements())
      if (!c.contains(d)) {
        contains_derived = false;
        break;
      }
    if (!contains_derived || !c.is_normal_in(g)) continue;

    ClassFunction phi;
    bool found = false;
    for (const auto& lin : linear_characters(c)) {
      if (is_faithful_linear(lin)) {
        phi = lin;
        found = true;
        break;
      }
    }
    if (!found) continue; // cyclic groups always have a faithful character
    ClassFunction induced = induce(phi, g);
    if (!g.is_abelian()) {
      bool all_pass = true;
      for (const Group& h : minimal_nonabelian_subgroups(g, opts.bound))
        if (!is_pnc_for_subgroup(induced, h)) {
          all_pass = false;
          break;
        }
      if (!all_pass)
        throw std::logic_error("cyclic_by_abelian_spnc_witness: induced character failed the "
                               "coset criterion");
    }
    return induced;
  }
  return std::nullopt;
}

MetabelianCriterion metabelian_criterion(const Group& g) {
  Group derived = g.derived_subgroup();
  if (!derived.is_abelian())
    throw std::domain_error("metabelian_criterion: group is not metabelian");
  MetabelianCriterion out;
  out.factors = abelian_invariants(derived);
  out.predicts_pnc = true;
  for (std::size_t i = 1; i < out.factors.size(); ++i)
    if (out.factors[i] == out.factors[i - 1]) out.predicts_pnc = false;
  return out;
}

SubgroupCharacterResult subgroup_character_condition(const Group& g) {
  Group a = g.derived_subgroup();
  if (!a.is_abelian())
    throw std::domain_error("subgroup_character_condition: group is not metabelian");
  SubgroupCharacterResult res;
  res.holds = true;
  if (a.order() == 1) return res; // no nontrivial subgroups to obstruct

  auto chars = linear_characters(a);
  for (const Group& k : all_subgroups(a)) {
    if (k.order() == 1) continue;
    // conjugates of k under the ambient group (the action factors through
    // G/A since A is abelian)
    std::vector<Group> orbit{k};
    {
      std::vector<Group> queue{k};
      while (!queue.empty()) {
        Group cur = std::move(queue.back());
        queue.pop_back();
        for (const Perm& s : g.generators()) {
          Group cj = cur.conjugated(s);
          bool fresh = true;
          for (const Group& o : orbit)
            if (o.same_elements(cj)) {
              fresh = false;
              break;
            }
          if (fresh) {
            orbit.push_back(cj);
            queue.push_back(std::move(cj));
          }
        }
      }
    }
    int found = -1;
    for (std::size_t ci = 0; ci < chars.size(); ++ci) {
      bool kernel_avoids_all = true;
      for (const Group& kk : orbit) {
        bool inside_kernel = true;
        for (const Perm& e : kk.elements())
          if (!chars[ci].evaluate(e).is_one()) {
            inside_kernel = false;
            break;
          }
        if (inside_kernel) {
          kernel_avoids_all = false;
          break;
        }
      }
      if (kernel_avoids_all) {
        found = static_cast<int>(ci);
        break;
      }
    }
    res.certificates.emplace_back(k, found);
    if (found < 0) {
      res.holds = false;
      if (!res.failing_subgroup) res.failing_subgroup = k;
    }
  }
  return res;
}

bool has_repeated_primary_factor(const Group& a) {
  auto inv = abelian_invariants(a);
  for (std::size_t i = 1; i < inv.size(); ++i)
    if (inv[i] == inv[i - 1]) return true;
  return false;
}

std::optional<Group> kernel_covered_subgroup(const Group& a, std::uint64_t seed, std::size_t bound) {
  if (!a.is_abelian()) throw std::domain_error("kernel_covered_subgroup: group is not abelian");
  if (a.order() > bound)
    throw BoundExceeded("kernel_covered_subgroup: order exceeds the automorphism-enumeration bound");
  const std::size_t n = a.order();
  if (n == 1) return std::nullopt;
  if (n > 64) throw BoundExceeded("kernel_covered_subgroup: bitmask representation limit");

  const auto& elems = a.elements();
  std::unordered_map<Perm, int> idx;
  for (std::size_t i = 0; i < n; ++i) idx.emplace(elems[i], static_cast<int>(i));
  // multiplication and order tables on indices
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = idx.at(compose(elems[i], elems[j]));
  std::vector<long> ord(n);
  for (std::size_t i = 0; i < n; ++i) ord[i] = elems[i].order();

  auto chars = linear_characters(a);
  std::vector<std::uint64_t> kernel_mask(chars.size(), 0);
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      if (chars[c].evaluate(elems[i]).is_one()) kernel_mask[c] |= (1ull << i);

  std::vector<Group> subs = all_subgroups(a);
  std::vector<std::uint64_t> sub_mask;
  std::vector<int> sub_index; // into subs
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (subs[s].order() == 1) continue;
    std::uint64_t m = 0;
    for (const Perm& e : subs[s].elements()) m |= (1ull << idx.at(e));
    sub_mask.push_back(m);
    sub_index.push_back(static_cast<int>(s));
  }

  auto basis = abelian_basis(a);
  const std::size_t r = basis.size();
  std::vector<int> basis_idx(r);
  for (std::size_t i = 0; i < r; ++i) basis_idx[i] = idx.at(basis[i].first);
  // exponent coordinates of every element
  std::vector<std::vector<long>> coord(n);
  {
    std::vector<long> tuple(r, 0);
    int cur = idx.at(a.identity());
    while (true) {
      coord[static_cast<std::size_t>(cur)] = tuple;
      std::size_t i = 0;
      while (i < r && tuple[i] + 1 == basis[i].second) {
        tuple[i] = 0;
        ++i;
      }
      if (i == r) break;
      ++tuple[i];
      cur = 0; // identity index: elements are sorted, identity is minimal
      for (std::size_t j = 0; j < r; ++j)
        for (long t = 0; t < tuple[j]; ++t) cur = mul[static_cast<std::size_t>(cur)][static_cast<std::size_t>(basis_idx[j])];
    }
  }

  // candidate images per basis slot: elements of order dividing basis order,
  // visited in a seeded pseudorandom order so that groups with huge
  // automorphism groups terminate quickly on a fully covered subgroup
  std::vector<std::vector<int>> cand(r);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t e = 0; e < n; ++e)
      if (basis[i].second % ord[e] == 0) cand[i].push_back(static_cast<int>(e));
    for (std::size_t j = cand[i].size(); j > 1; --j)
      std::swap(cand[i][j - 1], cand[i][rng.below(j)]);
  }

  const std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
  std::vector<std::vector<char>> covered(sub_mask.size(),
                                         std::vector<char>(chars.size(), 0));
  std::vector<std::size_t> uncovered(sub_mask.size(), chars.size());

  std::vector<std::size_t> pos(r, 0);
  std::vector<int> image(n);
  while (true) {
    // current tuple of images
    std::vector<int> tup(r);
    for (std::size_t i = 0; i < r; ++i) tup[i] = cand[i][pos[i]];
    // does it generate a?
    std::uint64_t span = 1ull << 0; // identity index 0 (sorted elements)
    std::vector<int> queue{0};
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < r; ++i) {
        int nx = mul[static_cast<std::size_t>(cur)][static_cast<std::size_t>(tup[i])];
        if (!(span & (1ull << nx))) {
          span |= (1ull << nx);
          queue.push_back(nx);
        }
      }
    }
    if (span == full) {
      // genuine automorphism: build the index map from coordinates
      for (std::size_t e = 0; e < n; ++e) {
        int img = 0;
        for (std::size_t i = 0; i < r; ++i)
          for (long t = 0; t < coord[e][i]; ++t)
            img = mul[static_cast<std::size_t>(img)][static_cast<std::size_t>(tup[i])];
        image[e] = img;
      }
      for (std::size_t s = 0; s < sub_mask.size(); ++s) {
        if (uncovered[s] == 0) continue;
        std::uint64_t im = 0;
        std::uint64_t m = sub_mask[s];
        while (m) {
          int b = __builtin_ctzll(m);
          m &= m - 1;
          im |= 1ull << image[static_cast<std::size_t>(b)];
        }
        for (std::size_t c = 0; c < chars.size(); ++c) {
          if (covered[s][c]) continue;
          if ((im & ~kernel_mask[c]) == 0) {
            covered[s][c] = 1;
            if (--uncovered[s] == 0)
              return subs[static_cast<std::size_t>(sub_index[s])];
          }
        }
      }
    }
    // advance odometer
    std::size_t i = 0;
    while (i < r && pos[i] + 1 == cand[i].size()) {
      pos[i] = 0;
      ++i;
    }
    if (i == r) break;
    ++pos[i];
  }
  return std::nullopt;
}

AglBigIrrepReport agl_unique_bigrep_analysis(long q, const EngineOptions& opts) {
  if (q <= 3 || q % 2 == 0)
    throw std::domain_error("agl_unique_bigrep_analysis: q must be an odd prime power > 3");
  MadeGroup made = make_group(parse_spec("AGL1(" + std::to_string(q) + ")"));
  const Group& g = made.group;
  if (g.order() > opts.bound)
    throw BoundExceeded("agl_unique_bigrep_analysis: order exceeds bound");
  long p = 2;
  while (q % p != 0) ++p;

  AglBigIrrepReport rep;
  rep.q = q;
  rep.p = p;
  const CharacterTable& table = character_table(g);
  int big = -1;
  int big_count = 0;
  for (std::size_t i = 0; i < table.degrees.size(); ++i)
    if (table.degrees[i] > 1) {
      big = static_cast<int>(i);
      ++big_count;
    }
  rep.unique_big_irreducible = (big_count == 1);
  if (!rep.unique_big_irreducible) return rep;
  const ClassFunction& chi = table.irreducibles[static_cast<std::size_t>(big)];
  rep.degree = table.degrees[static_cast<std::size_t>(big)];

  const Perm& t1 = made.named.at("t1");
  const Perm& mg = made.named.at("mg");
  rep.translation_value = chi.evaluate(t1).rational_value();
  Group rot = Group::generate({t1}, g.order());
  Cyclotomic sum;
  for (const Perm& e : rot.elements()) sum += chi.evaluate(e);
  rep.rotation_sum = sum.rational_value();

  Perm minus1 = mg;
  {
    long e = (q - 1) / 2;
    Perm acc(g.degree());
    for (long i = 0; i < e; ++i) acc = compose(acc, mg);
    minus1 = acc;
  }
  Group d = Group::generate({t1, minus1}, g.order());
  rep.lemma_fires = dihedral_lemma_check(g, d).has_value();
  return rep;
}

std::optional<int> big_irrep_spnc_check(const Group& g, const EngineOptions& opts) {
  if (g.is_abelian()) return std::nullopt;
  if (g.order() > opts.bound) throw BoundExceeded("big_irrep_spnc_check: order exceeds bound");
  const CharacterTable& table = character_table(g);
  std::vector<Group> mins = minimal_nonabelian_subgroups(g, opts.bound);
  std::size_t min_order = g.order();
  for (const Group& h : mins) min_order = std::min(min_order, h.order());
  long long max_index = static_cast<long long>(g.order() / min_order);
  for (std::size_t i = 0; i < table.degrees.size(); ++i) {
    if (table.degrees[i] <= max_index) continue;
    for (const Group& h : mins)
      if (!is_pnc_for_subgroup(table.irreducibles[i], h))
        throw std::logic_error("big_irrep_spnc_check: large irreducible failed the criterion");
    return static_cast<int>(i);
  }
  return std::nullopt;
}

} // namespace pnc
