#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pnc/catalog.hpp"
#include "pnc/chartable.hpp"
#include "pnc/classfun.hpp"

using namespace pnc;

namespace {
Perm P(const std::string& cycles, int degree) { return Perm::parse_cycles(cycles, degree); }
Group make(const std::string& spec) { return make_group(spec).group; }
} // namespace

TEST_CASE("built-in characters evaluate correctly") {
  Group s4 = make("S(4)");
  ClassFunction triv = trivial_character(s4);
  ClassFunction reg = regular_character(s4);
  ClassFunction perm = permutation_character(s4);
  ClassFunction sta = standard_character(s4);

  CHECK(triv.evaluate(P("(1 2)", 4)) == Cyclotomic(1));
  CHECK(reg.evaluate(Perm(4)) == Cyclotomic(24));
  CHECK(reg.evaluate(P("(1 2)", 4)) == Cyclotomic(0));
  CHECK(perm.evaluate(Perm(4)) == Cyclotomic(4));
  CHECK(sta.evaluate(Perm(4)) == Cyclotomic(3));
  CHECK(sta.evaluate(P("(1 2)", 4)) == Cyclotomic(1));
  CHECK(sta.evaluate(P("(1 2 3 4)", 4)) == Cyclotomic(-1)); // fixed-point-free
  // zero extension outside the group
  Group a4 = make("A(4)");
  ClassFunction sta_a4 = standard_character(a4);
  CHECK(sta_a4.evaluate(P("(1 2)", 4)) == Cyclotomic(0));
}

TEST_CASE("inner products") {
  Group s4 = make("S(4)");
  CHECK(inner_product(trivial_character(s4), trivial_character(s4), s4) == Cyclotomic(1));
  CHECK(inner_product(regular_character(s4), trivial_character(s4), s4) == Cyclotomic(1));
  const CharacterTable& t = character_table(s4);
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    CHECK(inner_product(t.irreducibles[i], t.irreducibles[i], s4) == Cyclotomic(1));
}

TEST_CASE("restriction") {
  Group s4 = make("S(4)");
  Group a4 = make("A(4)");
  Group s3 = Group::generate({P("(1 2 3)", 4), P("(1 2)", 4)});
  CHECK(restrict_to(trivial_character(s4), s3) == trivial_character(s3));

  const CharacterTable& t = character_table(s4);
  // a degree-3 irreducible of S_4 restricts irreducibly to A_4
  int deg3 = -1;
  for (std::size_t i = 0; i < t.degrees.size(); ++i)
    if (t.degrees[i] == 3) deg3 = static_cast<int>(i);
  REQUIRE(deg3 >= 0);
  ClassFunction res = restrict_to(t.irreducibles[static_cast<std::size_t>(deg3)], a4);
  CHECK(inner_product(res, res, a4) == Cyclotomic(1));

  Group triv_sub = Group::trivial(4);
  ClassFunction to_triv = restrict_to(t.irreducibles[static_cast<std::size_t>(deg3)], triv_sub);
  CHECK(to_triv.values().size() == 1);
  CHECK(to_triv.degree_value() == Cyclotomic(3));
  CHECK_THROWS_AS(restrict_to(trivial_character(s3), s4), std::domain_error);
}

TEST_CASE("induction") {
  Group s4 = make("S(4)");
  Group d4 = Group::generate({P("(1 2 3 4)", 4), P("(1 3)", 4)});
  ClassFunction ind = induce(trivial_character(d4), s4);
  CHECK(ind.degree_value() == Cyclotomic(3)); // index [S4:D4]

  // inducing the trivial character of the trivial subgroup gives the
  // regular character
  CHECK(induce(trivial_character(Group::trivial(4)), s4) == regular_character(s4));

  // trivial * index at the identity, and Frobenius reciprocity with the
  // trivial character: <Ind 1, 1> = <1, Res 1> = 1
  const CharacterTable& t = character_table(s4);
  auto mult = decompose(ind, t);
  CHECK(mult[0] == 1);
  long long total = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) total += mult[i] * t.degrees[i];
  CHECK(total == 3);
}

TEST_CASE("induced character of AGL1(5) from a nontrivial translation character") {
  MadeGroup made = make_group("AGL1(5)");
  const Group& g = made.group;
  Group a = Group::generate({made.named.at("t1")}, g.order());
  auto lins = linear_characters(a);
  REQUIRE(lins.size() == 5);
  // find a nontrivial linear character
  int nontrivial = -1;
  for (std::size_t i = 0; i < lins.size(); ++i)
    if (!(lins[i] == trivial_character(a))) nontrivial = static_cast<int>(i);
  REQUIRE(nontrivial >= 0);
  ClassFunction ind = induce(lins[static_cast<std::size_t>(nontrivial)], g);
  CHECK(ind.degree_value() == Cyclotomic(4));
  const CharacterTable& t = character_table(g);
  auto mult = decompose(ind, t);
  int hits = 0;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] != 0) {
      CHECK(mult[i] == 1);
      CHECK(t.degrees[i] == 4); // the unique big irreducible
      ++hits;
    }
  CHECK(hits == 1);
}

TEST_CASE("decompose") {
  Group s3 = make("S(3)");
  const CharacterTable& t = character_table(s3);
  auto reg = decompose(regular_character(s3), t);
  REQUIRE(reg.size() == t.degrees.size());
  for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reg[i] == t.degrees[i]);
  auto tr = decompose(trivial_character(s3), t);
  CHECK(tr == std::vector<long long>{1, 0, 0});
  // fix(g) minus 2 is not a character of S_3
  ClassFunction bogus = standard_character(s3) - trivial_character(s3);
  CHECK_THROWS_AS(decompose(bogus, t), std::domain_error);
}

TEST_CASE("linear characters of abelian groups") {
  Group c2 = make("C(2)");
  auto l2 = linear_characters(c2);
  REQUIRE(l2.size() == 2);
  CHECK(l2[0] == trivial_character(c2));
  CHECK(l2[1].evaluate(P("(1 2)", 2)) == Cyclotomic(-1));

  Group c6 = make("C(6)");
  auto l6 = linear_characters(c6);
  REQUIRE(l6.size() == 6);
  int faithful = 0;
  for (const auto& chi : l6)
    if (is_faithful_linear(chi)) ++faithful;
  CHECK(faithful == 2); // the two primitive sixth roots

  Group v4 = make("Ab(2,2)");
  auto l4 = linear_characters(v4);
  REQUIRE(l4.size() == 4);
  for (const auto& chi : l4) {
    CHECK(!is_faithful_linear(chi));
    for (const Perm& e : v4.elements()) {
      Cyclotomic val = chi.evaluate(e);
      CHECK((val == Cyclotomic(1) || val == Cyclotomic(-1)));
    }
  }
  for (const auto& chi : l6) CHECK(is_multiplicative(chi));
  CHECK_THROWS_AS(linear_characters(make("S(3)")), std::domain_error);
}

TEST_CASE("linear characters of nonabelian groups factor through the abelianization") {
  Group s4 = make("S(4)");
  auto lins = linear_characters_of(s4);
  REQUIRE(lins.size() == 2);
  for (const auto& chi : lins) CHECK(is_multiplicative(chi));
  CHECK(linear_characters_of(make("A(4)")).size() == 3);
  CHECK(linear_characters_of(make("Q8")).size() == 4);
}

TEST_CASE("restriction of induction to a normal subgroup") {
  // N = G: Res Ind phi = phi
  Group c6 = make("C(6)");
  for (const auto& phi : linear_characters(c6)) CHECK(verify_res_ind(phi, c6));

  // every linear character of the rotation subgroup of D_4
  Group d4 = Group::generate({P("(1 2 3 4)", 4), P("(1 3)", 4)});
  Group rot = Group::generate({P("(1 2 3 4)", 4)}, 8);
  for (const auto& phi : linear_characters(rot)) CHECK(verify_res_ind(phi, d4));

  // translations inside AGL1(5): Res Ind phi is the sum of the four
  // nontrivial characters
  MadeGroup made = make_group("AGL1(5)");
  Group a = Group::generate({made.named.at("t1")}, made.group.order());
  auto lins = linear_characters(a);
  ClassFunction phi = lins[1];
  CHECK(!(phi == trivial_character(a)));
  CHECK(verify_res_ind(phi, made.group));
  ClassFunction res = restrict_to(induce(phi, made.group), a);
  ClassFunction expected(a, std::vector<Cyclotomic>(a.classes().size(), Cyclotomic()));
  for (std::size_t i = 1; i < lins.size(); ++i) expected = expected + lins[i];
  CHECK(res == expected);

  Group s4 = make("S(4)");
  Group c4 = Group::generate({P("(1 2 3 4)", 4)});
  CHECK_THROWS_AS(verify_res_ind(linear_characters(c4)[1], s4), std::domain_error);
}

TEST_CASE("restrictions of characters decompose nonnegatively") {
  Group s4 = make("S(4)");
  Group s3 = Group::generate({P("(1 2 3)", 4), P("(1 2)", 4)});
  const CharacterTable& tg = character_table(s4);
  const CharacterTable& th = character_table(s3);
  for (const auto& chi : tg.irreducibles) {
    auto mult = decompose(restrict_to(chi, s3), th); // throws unless nonnegative integers
    long long deg = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) deg += mult[i] * th.degrees[i];
    CHECK(Cyclotomic(deg) == chi.degree_value());
  }
}
