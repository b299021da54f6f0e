#include "pnc/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "pnc/catalog.hpp"
#include "pnc/classfun.hpp"
#include "pnc/permstd.hpp"
#include "pnc/report.hpp"
#include "pnc/rng.hpp"

namespace pnc {

namespace {

struct CheckFailure : std::runtime_error {
  explicit CheckFailure(const std::string& w) : std::runtime_error(w) {}
};

void check(bool cond, const std::string& msg) {
  if (!cond) throw CheckFailure(msg);
}

Group make(const std::string& spec, std::size_t bound = kDefaultClosureBound) {
  return make_group(spec, bound).group;
}

Perm random_perm(int n, SplitMix64& rng) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(im[static_cast<std::size_t>(i)], im[rng.below(static_cast<std::size_t>(i) + 1)]);
  return Perm(im);
}

void validate_verdict_doc(const std::string& spec, const PncVerdict& v) {
  std::string err;
  check(validate_against_schema(verdict_to_json(spec, v), analysis_schema(), &err),
        "emitted document violates the schema: " + err);
}

// ---- criterion bodies ------------------------------------------------

std::string c1_s4(std::uint64_t) {
  Group g = make("S(4)");
  PncVerdict v = decide_pnc(g);
  check(v.status == PncStatus::NotPnc, "S(4) must be NOT_PNC");
  check(!v.obstructions.empty(), "S(4) needs an obstruction");
  const ObstructionReport& o = v.obstructions.front();
  check(o.kind == ObstructionKind::D4Conjugacy, "the order-8 fusion shortcut must fire");
  check(o.subgroup.order() == 8, "obstructing subgroup must have order 8");
  Group d0 = Group::generate(
      {Perm::parse_cycles("(1 2 3 4)", 4), Perm::parse_cycles("(1 3)", 4)});
  bool conj = false;
  for (const Perm& w : g.elements())
    if (o.subgroup.conjugated(w).same_elements(d0)) {
      conj = true;
      break;
    }
  check(conj, "obstructing subgroup must be conjugate to <(1234),(13)>");
  validate_verdict_doc("S(4)", v);
  return "NOT_PNC via order-8 fusion, subgroup conjugate to <(1234),(13)>";
}

std::string c2_a4(std::uint64_t) {
  Group g = make("A(4)");
  PncVerdict v = decide_pnc(g);
  check(v.status == PncStatus::Spnc, "A(4) must be SPNC");
  check(v.common_witness.has_value(), "A(4) needs a common witness");
  const CharacterTable& t = character_table(g);
  check(t.degrees[static_cast<std::size_t>(*v.common_witness)] == 3,
        "common witness must have degree 3");
  validate_verdict_doc("A(4)", v);
  return "SPNC with a degree-3 common witness";
}

std::string c3_supersolvable(std::uint64_t) {
  std::vector<std::string> specs;
  for (int n = 3; n <= 12; ++n) specs.push_back("D(" + std::to_string(n) + ")");
  specs.push_back("Q8");
  specs.push_back("Heis(3)");
  specs.push_back("C(2) x D(4)");
  for (const std::string& s : catalog_specs()) {
    Group g = make(s);
    if (g.is_abelian()) specs.push_back(s);
  }
  int witnesses = 0;
  for (const std::string& s : specs) {
    Group g = make(s);
    PncVerdict v = decide_pnc(g);
    check(v.status == PncStatus::Pnc || v.status == PncStatus::Spnc,
          s + " must be PNC or SPNC");
    const auto& classes = g.classes();
    for (const auto& cx : classes)
      for (const auto& cy : classes) {
        if (commutator(cx.representative, cy.representative).is_identity()) continue;
        SupersolvableWitness w = supersolvable_pnc_witness(g, cx.representative, cy.representative);
        check(w.verified(), s + ": witness verification failed for a class-representative pair");
        ++witnesses;
      }
  }
  return std::to_string(specs.size()) + " groups, " + std::to_string(witnesses) +
         " verified pair witnesses";
}

std::string c4_cyclic_by_abelian(std::uint64_t) {
  for (long p : {3, 5, 7, 11, 13}) {
    std::string s = "AGL1(" + std::to_string(p) + ")";
    Group g = make(s);
    PncVerdict v = decide_pnc(g);
    check(v.status == PncStatus::Spnc, s + " must be SPNC");
    auto wit = cyclic_by_abelian_spnc_witness(g);
    check(wit.has_value(), s + ": cyclic-by-abelian witness construction must succeed");
    check(wit->degree_value().rational_value() == Rational(p - 1),
          s + ": witness degree must be " + std::to_string(p - 1));
  }
  return "AGL1(p) SPNC with induced witnesses for p in {3,5,7,11,13}";
}

std::string c5_agl_powers(std::uint64_t) {
  EngineOptions opts;
  opts.bound = 750; // AGL1(27) has order 702
  std::ostringstream os;
  for (long q : {9L, 27L}) {
    std::string s = "AGL1(" + std::to_string(q) + ")";
    Group g = make(s);
    PncVerdict v = decide_pnc(g, opts);
    check(v.status == PncStatus::NotPnc, s + " must be NOT_PNC");
    validate_verdict_doc(s, v);
    AglBigIrrepReport rep = agl_unique_bigrep_analysis(q, opts);
    check(rep.unique_big_irreducible, s + ": exactly one irreducible of degree > 1");
    check(rep.degree == q - 1, s + ": big irreducible degree must be q-1");
    check(rep.translation_value == Rational(-1), s + ": translation value must be -1");
    long p = rep.p;
    check(rep.rotation_sum == Rational(q - p), s + ": rotation sum must be q-p");
    check(rep.lemma_fires, s + ": the dihedral obstruction must fire");
    os << s << " rotation sum " << rep.rotation_sum.str() << "; ";
  }
  return os.str();
}

std::string c6_psl2(std::uint64_t) {
  std::ostringstream os;
  for (long q : {4L, 5L, 7L, 8L, 9L}) {
    std::string s = "PSL2(" + std::to_string(q) + ")";
    Group g = make(s);
    PncVerdict v = decide_pnc(g);
    check(v.status == PncStatus::NotPnc, s + " must be NOT_PNC");
    std::size_t dorder = q % 2 == 0 ? 2 * (q - 1) : (q % 4 == 1 ? q + 1 : q - 1);
    auto d = find_dihedral_subgroup(g, dorder);
    check(d.has_value(), s + ": dihedral subgroup of order " + std::to_string(dorder));
    auto fired = dihedral_lemma_check(g, *d);
    check(fired.has_value(), s + ": dihedral obstruction must fire at order " +
                                 std::to_string(dorder));
    os << s << " D" << dorder / 2 << "; ";
  }
  return os.str();
}

std::string c7_psl33(std::uint64_t) {
  std::size_t tables_before = character_tables_computed();
  MadeGroup made = make_group("PSL33");
  const Group& g = made.group;
  check(g.order() == 5616, "PSL33 must have order 5616");
  auto rep = d4_conjugacy_obstruction(g, std::make_pair(made.named.at("r"), made.named.at("f")));
  check(rep.has_value(), "the order-8 fusion obstruction must fire on the seeded generators");
  Group seeded = Group::generate({made.named.at("r"), made.named.at("f")});
  check(rep->subgroup.same_elements(seeded), "the report must use the seeded subgroup");
  PncVerdict v = decide_pnc(g); // order above bound, shortcut must carry it
  check(v.status == PncStatus::NotPnc, "PSL33 must be NOT_PNC");
  check(character_tables_computed() == tables_before,
        "no character table may be computed for PSL33");
  validate_verdict_doc("PSL33", v);
  return "NOT_PNC via seeded fusion obstruction, no table computed";
}

std::string c8_fsemi(std::uint64_t) {
  Group g = make("FSemi(5)");
  check(g.order() == 75, "FSemi(5) must have order 75");
  PncVerdict v = decide_pnc(g);
  check(v.status == PncStatus::Spnc, "FSemi(5) must be SPNC");
  auto wit = big_irrep_spnc_check(g);
  check(wit.has_value(), "big-irreducible criterion must produce a witness");
  const CharacterTable& t = character_table(g);
  check(t.degrees[static_cast<std::size_t>(*wit)] == 3, "witness degree must be 3");
  std::size_t min_order = g.order();
  for (const Group& h : minimal_nonabelian_subgroups(g)) min_order = std::min(min_order, h.order());
  check(g.order() / min_order < 3, "every nonabelian subgroup must have index < 3");
  return "SPNC, degree-3 witness, max nonabelian index " +
         std::to_string(g.order() / min_order);
}

std::string c9_metabelian(std::uint64_t) {
  int tested = 0;
  for (const std::string& s : catalog_specs()) {
    Group g = make(s);
    if (g.order() > kDefaultAnalysisBound) continue;
    if (!g.is_metabelian()) continue;
    MetabelianCriterion mc = metabelian_criterion(g);
    if (!mc.predicts_pnc) continue;
    PncVerdict v = decide_pnc(g);
    check(v.status == PncStatus::Pnc || v.status == PncStatus::Spnc,
          s + ": distinct prime-power factors must imply PNC");
    ++tested;
  }
  check(tested > 0, "no metabelian groups tested");
  return std::to_string(tested) + " predicted-PNC metabelian groups verified, 0 counterexamples";
}

void abelian_types_of(long n, std::vector<std::vector<long>>& out) {
  // all multisets of prime powers with product n
  out.clear();
  std::vector<std::vector<long>> acc{{}};
  long rest = n;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // partitions of e, rendered as powers of p
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
      if (remaining == 0) {
        parts.push_back(cur);
        return;
      }
      for (int first = std::min(remaining, maxpart); first >= 1; --first) {
        long pw = 1;
        for (int i = 0; i < first; ++i) pw *= p;
        cur.push_back(pw);
        rec(remaining - first, first);
        cur.pop_back();
      }
    };
    rec(e, e);
    std::vector<std::vector<long>> merged;
    for (const auto& a : acc)
      for (const auto& b : parts) {
        auto c = a;
        c.insert(c.end(), b.begin(), b.end());
        merged.push_back(std::move(c));
      }
    acc = std::move(merged);
  }
  out = std::move(acc);
}

std::string c10_duality(std::uint64_t seed) {
  int agree = 0;
  for (long n = 1; n <= 36; ++n) {
    std::vector<std::vector<long>> types;
    abelian_types_of(n, types);
    for (const auto& type : types) {
      std::ostringstream spec;
      if (type.empty()) {
        spec << "C(1)";
      } else {
        spec << "Ab(";
        for (std::size_t i = 0; i < type.size(); ++i) {
          if (i) spec << ",";
          spec << type[i];
        }
        spec << ")";
      }
      Group a = make(spec.str());
      bool two = has_repeated_primary_factor(a);
      auto one = kernel_covered_subgroup(a, seed);
      check(one.has_value() == two,
            spec.str() + ": condition-1 witness " + (one ? "exists" : "missing") +
                " but condition 2 is " + (two ? "true" : "false"));
      ++agree;
    }
  }
  return std::to_string(agree) + " abelian types checked, conditions agree on all";
}

std::string c11_standard_pairs(std::uint64_t seed) {
  SplitMix64 rng(seed);
  int total = 0;
  for (int n = 3; n <= 7; ++n) {
    int done = 0;
    while (done < 200) {
      Perm x = random_perm(n, rng);
      Perm y = random_perm(n, rng);
      if (commutator(x, y).is_identity()) continue;
      StdPairReport rep = std_pnc_pair(x, y, n);
      bool chr = std_pnc_char_check(x, y, n);
      check(rep.verdict == chr,
            "standard-representation verdicts disagree at n=" + std::to_string(n) + " for " +
                x.cycle_string() + ", " + y.cycle_string());
      ++done;
      ++total;
    }
  }
  return std::to_string(total) + " seeded pairs, both routes agree on all";
}

std::string c12_character_properties(std::uint64_t seed) {
  const std::vector<std::string> specs = {
      "S(3)",     "S(4)",   "A(4)",    "A(5)",    "D(4)",    "D(5)",   "D(6)",
      "D(12)",    "Q8",     "Heis(3)", "C(12)",   "Ab(2,4)", "C(2) x D(4)",
      "AGL1(5)",  "AGL1(8)", "AGL1(9)", "PSL2(4)", "PSL2(7)", "FSemi(5)"};
  std::vector<Group> groups;
  for (const auto& s : specs) groups.push_back(make(s));

  // exact orthogonality and degree identities on every table
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const Group& g = groups[gi];
    const CharacterTable& t = character_table(g);
    long long sum_sq = 0;
    for (long long d : t.degrees) {
      sum_sq += d * d;
      check(static_cast<long long>(g.order()) % d == 0,
            specs[gi] + ": irreducible degree must divide the group order");
    }
    check(sum_sq == static_cast<long long>(g.order()), specs[gi] + ": degree squares must sum");
    const std::size_t r = t.irreducibles.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Cyclotomic ip = inner_product(t.irreducibles[i], t.irreducibles[j], g);
        check(ip == Cyclotomic(i == j ? 1 : 0), specs[gi] + ": row orthogonality failed");
      }
    const auto& classes = g.classes();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Cyclotomic sum;
        for (std::size_t k = 0; k < r; ++k)
          sum += t.irreducibles[k].at_class(static_cast<int>(i)) *
                 t.irreducibles[k].at_class(static_cast<int>(j)).conj();
        Cyclotomic expect =
            i == j ? Cyclotomic(Rational(static_cast<long long>(g.order() / classes[i].size())))
                   : Cyclotomic();
        check(sum == expect, specs[gi] + ": column orthogonality failed");
      }
  }

  SplitMix64 rng(seed ^ 0xc12c12);
  auto random_subgroup = [&](const Group& g) {
    std::size_t k = 1 + rng.below(2);
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(g.elements()[rng.below(g.order())]);
    return Group::generate(gens, g.order());
  };

  // Frobenius reciprocity, 50 seeded instances
  for (int inst = 0; inst < 50; ++inst) {
    const Group& g = groups[rng.below(groups.size())];
    const CharacterTable& t = character_table(g);
    Group h = random_subgroup(g);
    auto lins = linear_characters_of(h);
    const ClassFunction& lambda = lins[rng.below(lins.size())];
    const ClassFunction& chi = t.irreducibles[rng.below(t.irreducibles.size())];
    Cyclotomic lhs = inner_product(restrict_to(chi, h), lambda, h);
    Cyclotomic rhs = inner_product(chi, induce(lambda, g), g);
    check(lhs == rhs, "Frobenius reciprocity failed on a seeded instance");
  }

  // Res-of-Ind identity on 20 seeded normal subgroups
  for (int inst = 0; inst < 20; ++inst) {
    const Group& g = groups[rng.below(groups.size())];
    Group n = normal_closure(g, {g.elements()[rng.below(g.order())]});
    auto lins = linear_characters_of(n);
    const ClassFunction& phi = lins[rng.below(lins.size())];
    check(verify_res_ind(phi, g), "restriction of an induced character failed on a seeded "
                                  "normal subgroup");
  }

  // transversal independence of induction on 20 seeded instances
  for (int inst = 0; inst < 20; ++inst) {
    const Group& g = groups[rng.below(groups.size())];
    Group a = random_subgroup(g);
    auto lins = linear_characters_of(a);
    const ClassFunction& lambda = lins[rng.below(lins.size())];
    CosetDecomposition dec = left_cosets(g, a);
    std::vector<Perm> transversal;
    for (const auto& coset : dec.cosets) transversal.push_back(coset[rng.below(coset.size())]);
    check(induce(lambda, g) == induce_with_transversal(lambda, g, transversal),
          "induction depends on the transversal");
  }
  return "orthogonality on " + std::to_string(groups.size()) +
         " tables; 50 reciprocity, 20 res-ind, 20 transversal instances exact";
}

std::string c13_upward(std::uint64_t) {
  using clock = std::chrono::steady_clock;
  std::ostringstream os;
  for (const std::string& s : {std::string("S(5)"), std::string("S(6)")}) {
    auto t0 = clock::now();
    Group g = make(s);
    PncVerdict v = decide_pnc(g);
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    check(v.status == PncStatus::NotPnc, s + " must be NOT_PNC");
    check(!v.obstructions.empty() && v.obstructions[0].kind == ObstructionKind::D4Conjugacy,
          s + ": the shortcut obstruction must fire");
    check(secs < 60.0, s + ": shortcut must finish within 60 s");
    validate_verdict_doc(s, v);
    os << s << " " << static_cast<int>(secs * 1000) << "ms; ";
  }
  return os.str();
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<std::string(std::uint64_t)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1, "S(4) not PNC via order-8 fusion", 1.0, c1_s4},
      {2, "A(4) SPNC with degree-3 witness", 1.0, c2_a4},
      {3, "supersolvable suite", 60.0, c3_supersolvable},
      {4, "cyclic-by-abelian suite", 60.0, c4_cyclic_by_abelian},
      {5, "AGL1(9)/AGL1(27) unique big irreducible", 120.0, c5_agl_powers},
      {6, "PSL2(q) dihedral obstructions", 600.0, c6_psl2},
      {7, "PSL33 seeded fusion obstruction", 60.0, c7_psl33},
      {8, "FSemi(5) big-irreducible SPNC", 30.0, c8_fsemi},
      {9, "metabelian factor criterion consistency", 0.0, c9_metabelian},
      {10, "abelian duality conditions agree to order 36", 600.0, c10_duality},
      {11, "standard-representation pair equivalence", 60.0, c11_standard_pairs},
      {12, "character-theory property suite", 0.0, c12_character_properties},
      {13, "S(5)/S(6) shortcut obstructions", 120.0, c13_upward},
  };
  return cs;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit_seconds;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = c.body(seed);
      r.pass = true;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += " [exceeded the " + std::to_string(r.limit_seconds) + " s budget]";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.name << "] ("
     << static_cast<long>(r.seconds * 1000) << " ms)";
  if (!r.detail.empty()) os << " - " << r.detail;
  return os.str();
}

std::string run_survey(std::size_t bound, bool as_json, double budget_seconds) {
  const auto& specs = catalog_specs();
  std::vector<std::string> results(specs.size());
  std::atomic<std::size_t> cursor{0};
  auto analyze_one = [&](const std::string& spec) -> std::string {
    EngineOptions opts;
    opts.bound = bound;
    opts.budget_seconds = budget_seconds;
    try {
      Group g = make_group(spec).group;
      PncVerdict v = decide_pnc(g, opts);
      if (as_json) return verdict_to_json(spec, v).dump();
      std::ostringstream os;
      os << spec << " | order " << g.order() << " | " << to_string(v.status);
      if (v.common_witness) os << " | common witness #" << *v.common_witness;
      if (!v.obstructions.empty()) os << " | " << to_string(v.obstructions[0].kind);
      return os.str();
    } catch (const std::exception& e) {
      if (as_json) {
        nlohmann::json j;
        j["spec"] = spec;
        j["error"] = e.what();
        return j.dump();
      }
      return spec + " | error: " + e.what();
    }
  };
  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= specs.size()) break;
      results[i] = analyze_one(specs[i]);
    }
  };
  unsigned nw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < nw; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream out;
  if (as_json) {
    out << "[";
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i) out << ",";
      out << "\n" << results[i];
    }
    out << "\n]\n";
  } else {
    for (const auto& r : results) out << r << "\n";
  }
  return out.str();
}

} // namespace pnc
