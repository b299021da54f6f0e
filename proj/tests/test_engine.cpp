#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pnc/catalog.hpp"
#include "pnc/classfun.hpp"
#include "pnc/engine.hpp"

using namespace pnc;

namespace {
Perm P(const std::string& cycles, int degree) { return Perm::parse_cycles(cycles, degree); }
Group make(const std::string& spec) { return make_group(spec).group; }

// independent route: chi is PNC for h exactly when the restriction has zero
// multiplicity on every one-dimensional character of h
bool pnc_via_linear_multiplicities(const ClassFunction& chi, const Group& h) {
  for (const auto& lambda : linear_characters_of(h)) {
    Cyclotomic m = inner_product(restrict_to(chi, h), lambda, h);
    if (!m.is_zero()) return false;
  }
  return true;
}
} // namespace

TEST_CASE("coset-sum criterion on pinned examples") {
  Group s4 = make("S(4)");
  Group d4 = Group::generate({P("(1 2 3 4)", 4), P("(1 3)", 4)});
  Group s3 = Group::generate({P("(1 2 3)", 4), P("(1 2)", 4)});
  Group a4 = make("A(4)");

  CHECK(!is_pnc_for_subgroup(trivial_character(s4), d4));

  const CharacterTable& td4 = character_table(d4);
  CHECK(is_pnc_for_subgroup(td4.irreducibles[4], d4)); // the degree-2 row

  // fix(g)-1 on S_4: its restriction to a point stabilizer S_3 contains the
  // trivial character (coset sums 3 and 3), while the restriction to A_4
  // sums to zero on every coset of the Klein four-group
  ClassFunction sta = standard_character(s4);
  CHECK(!is_pnc_for_subgroup(sta, s3));
  auto fail = pnc_failing_coset(sta, s3);
  REQUIRE(fail.has_value());
  CHECK(fail->second == Cyclotomic(3));
  CHECK(is_pnc_for_subgroup(sta, a4));

  CHECK_THROWS_AS(is_pnc_for_subgroup(sta, Group::generate({P("(1 2 3 4)", 4)})),
                  std::domain_error); // abelian subgroup
}

TEST_CASE("criterion equivalence with linear multiplicities on groups up to order 48") {
  for (const std::string& spec : {"S(3)", "D(4)", "Q8", "A(4)", "S(4)", "D(6)", "C(2) x D(4)"}) {
    Group g = make(spec);
    REQUIRE(g.order() <= 48);
    const CharacterTable& t = character_table(g);
    for (const Group& h : all_subgroups(g)) {
      if (h.is_abelian()) continue;
      for (const auto& chi : t.irreducibles)
        CHECK_MESSAGE(is_pnc_for_subgroup(chi, h) == pnc_via_linear_multiplicities(chi, h),
                      spec, " subgroup of order ", h.order());
    }
  }
}

TEST_CASE("pnc irreducible sets") {
  Group a4 = make("A(4)");
  const CharacterTable& ta4 = character_table(a4);
  auto wits = pnc_irreducibles(ta4, a4);
  REQUIRE(!wits.empty());
  bool has_deg3 = false;
  for (int w : wits)
    if (ta4.degrees[static_cast<std::size_t>(w)] == 3) has_deg3 = true;
  CHECK(has_deg3);

  Group s4 = make("S(4)");
  Group d4 = Group::generate({P("(1 2 3 4)", 4), P("(1 3)", 4)});
  CHECK(pnc_irreducibles(character_table(s4), d4).empty());
}

TEST_CASE("pair decisions") {
  Group s4 = make("S(4)");
  CHECK(!is_pnc_for_pair(s4, P("(1 2 3 4)", 4), P("(1 3)", 4)).pnc);

  Group a4 = make("A(4)");
  for (const Perm& x : a4.elements())
    for (const Perm& y : a4.elements()) {
      if (commutator(x, y).is_identity()) continue;
      CHECK(is_pnc_for_pair(a4, x, y).pnc);
    }

  Group d4 = Group::generate({P("(1 2 3 4)", 4), P("(1 3)", 4)});
  auto dec = is_pnc_for_pair(d4, P("(1 2 3 4)", 4), P("(1 3)", 4));
  CHECK(dec.pnc);
  REQUIRE(dec.witness.has_value());
  CHECK(character_table(d4).degrees[static_cast<std::size_t>(*dec.witness)] == 2);

  CHECK_THROWS_AS(is_pnc_for_pair(s4, P("(1 2)", 4), P("(3 4)", 4)), std::domain_error);
}

TEST_CASE("full verdicts") {
  PncVerdict ab = decide_pnc(make("C(12)"));
  CHECK(ab.status == PncStatus::Pnc);
  CHECK(ab.minimal_subgroups.empty());

  PncVerdict s4 = decide_pnc(make("S(4)"));
  CHECK(s4.status == PncStatus::NotPnc);
  REQUIRE(!s4.obstructions.empty());
  CHECK(s4.obstructions[0].kind == ObstructionKind::D4Conjugacy);
  CHECK(s4.obstructions[0].subgroup.order() == 8);

  PncVerdict a4 = decide_pnc(make("A(4)"));
  CHECK(a4.status == PncStatus::Spnc);
  REQUIRE(a4.common_witness.has_value());

  PncVerdict d4 = decide_pnc(make("D(4)"));
  CHECK(d4.status == PncStatus::Spnc);
  PncVerdict q8 = decide_pnc(make("Q8"));
  CHECK(q8.status == PncStatus::Spnc);

  // bound policy: over-bound groups without a firing shortcut stay open,
  // with an explanation and no certificates
  EngineOptions tight;
  tight.bound = 10;
  PncVerdict big = decide_pnc(make("AGL1(13)"), tight);
  CHECK(big.status == PncStatus::Undecided);
  CHECK(big.obstructions.empty());
  CHECK(big.witnesses.empty());
  CHECK(!big.notes.empty());
}

TEST_CASE("verdict invariants") {
  for (const std::string& spec : {"S(4)", "A(4)", "D(4)", "Q8", "D(6)", "AGL1(5)", "Heis(3)"}) {
    PncVerdict v = decide_pnc(make(spec));
    if (v.status == PncStatus::NotPnc) CHECK(!v.obstructions.empty());
    if (v.status == PncStatus::Pnc || v.status == PncStatus::Spnc)
      for (const auto& w : v.witnesses) CHECK(!w.empty());
    if (v.status == PncStatus::Spnc) {
      REQUIRE(v.common_witness.has_value());
      for (const auto& w : v.witnesses)
        CHECK(std::find(w.begin(), w.end(), *v.common_witness) != w.end());
    }
  }
}

TEST_CASE("order-8 fusion shortcut") {
  Group s4 = make("S(4)");
  auto rep = d4_conjugacy_obstruction(s4);
  REQUIRE(rep.has_value());
  CHECK(rep->kind == ObstructionKind::D4Conjugacy);
  CHECK(rep->subgroup.order() == 8);
  CHECK(rep->central.order() == 2);
  CHECK(conjugate(rep->central, rep->conjugator) == rep->fused);

  CHECK(!d4_conjugacy_obstruction(make("D(4)")).has_value());
  CHECK(!d4_conjugacy_obstruction(make("C(2) x D(4)")).has_value());
  CHECK(!d4_conjugacy_obstruction(make("A(4)")).has_value());
}

TEST_CASE("dihedral lemma check") {
  MadeGroup agl9 = make_group("AGL1(9)");
  const Group& g = agl9.group;
  Perm t1 = agl9.named.at("t1");
  Perm mg = agl9.named.at("mg");
  Perm m_minus1 = Perm(g.degree());
  for (int i = 0; i < 4; ++i) m_minus1 = compose(m_minus1, mg); // g^4 = -1 in GF(9)
  Group d = Group::generate({t1, m_minus1}, g.order());
  CHECK(d.order() == 6);
  auto rep = dihedral_lemma_check(g, d);
  REQUIRE(rep.has_value());
  CHECK(rep->kind == ObstructionKind::DihedralLemma);

  // a dihedral group is never obstructed against itself
  Group d4 = make("D(4)");
  CHECK(!dihedral_lemma_check(d4, d4).has_value());

  // nor can the lemma fire inside a group that is PNC: the faithful
  // degree-2 character of D(6) separates its nested S_3
  Group d6 = make("D(6)");
  auto s3 = find_dihedral_subgroup(d6, 6);
  REQUIRE(s3.has_value());
  CHECK(!dihedral_lemma_check(d6, *s3).has_value());

  // PSL2(5) with a dihedral subgroup of order q+1 = 6
  Group psl = make("PSL2(5)");
  auto dd = find_dihedral_subgroup(psl, 6);
  REQUIRE(dd.has_value());
  CHECK(dihedral_lemma_check(psl, *dd).has_value());

  CHECK_THROWS_AS(dihedral_lemma_check(psl, Group::generate({psl.elements()[1]}, 60)),
                  std::domain_error); // not dihedral
}

TEST_CASE("supersolvable witness construction") {
  Group d4 = make("D(4)");
  Perm r = P("(1 2 3 4)", 4), s = P("(1 3)", 4);
  SupersolvableWitness w = supersolvable_pnc_witness(d4, r, s);
  CHECK(w.verified());
  CHECK(w.character.degree_value() == Cyclotomic(4)); // induced from the order-2 level

  MadeGroup q8 = make_group("Q8");
  Perm i = q8.named.at("i"), j = q8.named.at("j");
  Perm c = commutator(i, j);
  CHECK(c.order() == 2); // [i,j] = -1
  SupersolvableWitness wq = supersolvable_pnc_witness(q8.group, i, j);
  CHECK(wq.verified());

  Group heis = make("Heis(3)");
  const auto& gens = heis.generators();
  SupersolvableWitness wh = supersolvable_pnc_witness(heis, gens[0], gens[1]);
  CHECK(wh.verified());

  CHECK_THROWS_AS(supersolvable_pnc_witness(make("A(4)"), P("(1 2 3)", 4), P("(1 2)(3 4)", 4)),
                  std::domain_error); // not supersolvable
  CHECK_THROWS_AS(supersolvable_pnc_witness(d4, r, r), std::domain_error); // commuting
}

TEST_CASE("cyclic-by-abelian witness") {
  Group agl5 = make("AGL1(5)");
  auto w5 = cyclic_by_abelian_spnc_witness(agl5);
  REQUIRE(w5.has_value());
  CHECK(w5->degree_value() == Cyclotomic(4));

  Group d5 = make("D(5)");
  auto wd = cyclic_by_abelian_spnc_witness(d5);
  REQUIRE(wd.has_value());
  CHECK(wd->degree_value() == Cyclotomic(2));

  // central cyclic subgroup with abelian quotient
  auto wh = cyclic_by_abelian_spnc_witness(make("Heis(3)"));
  REQUIRE(wh.has_value());
  CHECK(wh->degree_value() == Cyclotomic(9));

  CHECK(!cyclic_by_abelian_spnc_witness(make("A(4)")).has_value());
  // the derived subgroup of AGL1(9) is C_3 x C_3: no cyclic candidate
  CHECK(!cyclic_by_abelian_spnc_witness(make("AGL1(9)")).has_value());
}

TEST_CASE("metabelian factor criterion") {
  MetabelianCriterion d12 = metabelian_criterion(make("D(12)"));
  CHECK(d12.factors == std::vector<long>{2, 3}); // derived subgroup C_6
  CHECK(d12.predicts_pnc);

  MetabelianCriterion a4 = metabelian_criterion(make("A(4)"));
  CHECK(a4.factors == std::vector<long>{2, 2});
  CHECK(!a4.predicts_pnc);

  MetabelianCriterion agl9 = metabelian_criterion(make("AGL1(9)"));
  CHECK(agl9.factors == std::vector<long>{3, 3});
  CHECK(!agl9.predicts_pnc);

  CHECK_THROWS_AS(metabelian_criterion(make("S(4)")), std::domain_error);
}

TEST_CASE("subgroup character condition") {
  CHECK(subgroup_character_condition(make("AGL1(5)")).holds);
  CHECK(subgroup_character_condition(make("D(5)")).holds);
  SubgroupCharacterResult agl9 = subgroup_character_condition(make("AGL1(9)"));
  CHECK(!agl9.holds);
  SubgroupCharacterResult a4 = subgroup_character_condition(make("A(4)"));
  CHECK(!a4.holds); // every character kernel contains a conjugate of some C_2
  REQUIRE(a4.failing_subgroup.has_value());
  CHECK(a4.failing_subgroup->order() == 2);
}

TEST_CASE("subgroup character condition certificates induce actual witnesses") {
  // for each nonabelian subgroup H, the certificate character for K = [H,H]
  // induces up to a character that passes the coset-sum criterion for H
  for (const std::string& spec : {"AGL1(5)", "D(6)", "Q8"}) {
    Group g = make(spec);
    Group a = g.derived_subgroup();
    SubgroupCharacterResult res = subgroup_character_condition(g);
    REQUIRE(res.holds);
    auto chars = linear_characters(a);
    for (const Group& h : all_subgroups(g)) {
      if (h.is_abelian()) continue;
      Group k = h.derived_subgroup();
      int chi_index = -1;
      for (const auto& [cert_k, idx] : res.certificates)
        if (cert_k.same_elements(k)) chi_index = idx;
      REQUIRE_MESSAGE(chi_index >= 0, spec, ": no certificate for a commutator subgroup");
      ClassFunction induced = induce(chars[static_cast<std::size_t>(chi_index)], g);
      CHECK_MESSAGE(is_pnc_for_subgroup(induced, h), spec, " subgroup of order ", h.order());
    }
  }
}

TEST_CASE("subgroup character condition holding implies a PNC verdict") {
  for (const std::string& spec :
       {"D(4)", "D(5)", "D(6)", "D(12)", "Q8", "Heis(3)", "S(3)", "A(4)", "AGL1(5)", "AGL1(7)",
        "AGL1(8)", "AGL1(9)", "FSemi(5)", "C(2) x D(4)"}) {
    Group g = make(spec);
    if (!g.is_metabelian()) continue;
    if (!subgroup_character_condition(g).holds) continue;
    PncVerdict v = decide_pnc(g);
    bool pnc = v.status == PncStatus::Pnc || v.status == PncStatus::Spnc;
    CHECK_MESSAGE(pnc, spec);
  }
}

TEST_CASE("duality conditions on abelian groups") {
  Group v4 = make("Ab(2,2)");
  CHECK(has_repeated_primary_factor(v4));
  auto k = kernel_covered_subgroup(v4);
  REQUIRE(k.has_value());
  CHECK(k->order() == 2);

  Group c6 = make("C(6)");
  CHECK(!has_repeated_primary_factor(c6));
  CHECK(!kernel_covered_subgroup(c6).has_value());

  Group c2c4 = make("Ab(2,4)");
  CHECK(!has_repeated_primary_factor(c2c4));
  CHECK(!kernel_covered_subgroup(c2c4).has_value());

  CHECK_THROWS_AS(kernel_covered_subgroup(make("S(3)")), std::domain_error);
  CHECK_THROWS_AS(kernel_covered_subgroup(make("Ab(2,2,2,2,2,2)")), BoundExceeded);
}

TEST_CASE("affine big-irreducible analysis") {
  AglBigIrrepReport r5 = agl_unique_bigrep_analysis(5);
  CHECK(r5.unique_big_irreducible);
  CHECK(r5.degree == 4);
  CHECK(r5.translation_value == Rational(-1));
  CHECK(r5.rotation_sum == Rational(0));
  CHECK(!r5.lemma_fires);

  AglBigIrrepReport r9 = agl_unique_bigrep_analysis(9);
  CHECK(r9.unique_big_irreducible);
  CHECK(r9.degree == 8);
  CHECK(r9.p == 3);
  CHECK(r9.translation_value == Rational(-1));
  CHECK(r9.rotation_sum == Rational(6));
  CHECK(r9.lemma_fires);

  CHECK_THROWS_AS(agl_unique_bigrep_analysis(8), std::domain_error);
  CHECK_THROWS_AS(agl_unique_bigrep_analysis(3), std::domain_error);
}

TEST_CASE("big irreducible SPNC criterion") {
  auto a4 = big_irrep_spnc_check(make("A(4)"));
  REQUIRE(a4.has_value());
  CHECK(character_table(make("A(4)")).degrees[static_cast<std::size_t>(*a4)] == 3);
  CHECK(!big_irrep_spnc_check(make("S(4)")).has_value());
}

TEST_CASE("SPNC reduction matches brute force over multiplicity-free sums") {
  for (const std::string& spec : {"S(3)", "D(4)", "Q8", "A(4)", "S(4)", "D(6)"}) {
    Group g = make(spec);
    REQUIRE(g.order() <= 48);
    const CharacterTable& t = character_table(g);
    const std::size_t r = t.irreducibles.size();

    // all 2-generated nonabelian subgroups
    std::vector<Group> twogen;
    for (const Perm& x : g.elements())
      for (const Perm& y : g.elements()) {
        if (commutator(x, y).is_identity()) continue;
        Group h = Group::generate({x, y}, g.order());
        bool fresh = true;
        for (const Group& o : twogen)
          if (o.same_elements(h)) {
            fresh = false;
            break;
          }
        if (fresh) twogen.push_back(std::move(h));
      }

    bool brute = false;
    for (std::size_t mask = 1; mask < (1u << r); ++mask) {
      ClassFunction sum(g, std::vector<Cyclotomic>(g.classes().size(), Cyclotomic()));
      for (std::size_t i = 0; i < r; ++i)
        if (mask & (1u << i)) sum = sum + t.irreducibles[i];
      bool all = true;
      for (const Group& h : twogen)
        if (!is_pnc_for_subgroup(sum, h)) {
          all = false;
          break;
        }
      if (all) {
        brute = true;
        break;
      }
    }

    PncVerdict v = decide_pnc(g);
    bool reduced = v.status == PncStatus::Spnc;
    CHECK_MESSAGE(brute == reduced, spec);
  }
}

TEST_CASE("upward closure within the catalog") {
  CHECK(decide_pnc(make("S(4)")).status == PncStatus::NotPnc);
  CHECK(decide_pnc(make("S(5)")).status == PncStatus::NotPnc);
  CHECK(decide_pnc(make("S(6)")).status == PncStatus::NotPnc);
}
