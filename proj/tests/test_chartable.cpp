#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pnc/catalog.hpp"
#include "pnc/chartable.hpp"

using namespace pnc;

namespace {
Perm P(const std::string& cycles, int degree) { return Perm::parse_cycles(cycles, degree); }
Group make(const std::string& spec) { return make_group(spec).group; }

std::vector<long long> degrees_of(const std::string& spec) {
  return character_table(make(spec)).degrees;
}
} // namespace

TEST_CASE("cyclic group tables are the duality tables") {
  Group c3 = make("C(3)");
  const CharacterTable& t = character_table(c3);
  REQUIRE(t.irreducibles.size() == 3);
  CHECK(t.degrees == std::vector<long long>{1, 1, 1});
  // rows are exactly the maps g^k -> zeta_3^(jk)
  Perm g = P("(1 2 3)", 3);
  for (long j = 0; j < 3; ++j) {
    bool found = false;
    for (const auto& chi : t.irreducibles) {
      bool match = true;
      Perm x(3);
      for (long k = 0; k < 3; ++k) {
        if (!(chi.evaluate(x) == Cyclotomic::root(3, j * k))) {
          match = false;
          break;
        }
        x = compose(x, g);
      }
      if (match) found = true;
    }
    CHECK_MESSAGE(found, "character j=", j);
  }
}

TEST_CASE("symmetric group degrees") {
  CHECK(degrees_of("S(3)") == std::vector<long long>{1, 1, 2});
  CHECK(degrees_of("S(4)") == std::vector<long long>{1, 1, 2, 3, 3});
  CHECK(degrees_of("A(4)") == std::vector<long long>{1, 1, 1, 3});
  CHECK(degrees_of("Q8") == std::vector<long long>{1, 1, 1, 1, 2});
  CHECK(degrees_of("A(5)") == std::vector<long long>{1, 3, 3, 4, 5});
  CHECK(degrees_of("Heis(3)") == std::vector<long long>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
}

TEST_CASE("regular character decomposes with multiplicity = degree") {
  for (const std::string& spec : {"S(3)", "S(4)", "A(4)", "D(6)", "Q8", "AGL1(5)"}) {
    Group g = make(spec);
    const CharacterTable& t = character_table(g);
    auto mult = decompose(regular_character(g), t);
    REQUIRE(mult.size() == t.degrees.size());
    for (std::size_t i = 0; i < mult.size(); ++i) CHECK_MESSAGE(mult[i] == t.degrees[i], spec);
  }
}

TEST_CASE("dihedral order-8 table pins the faithful degree-2 row") {
  Group d4 = Group::generate({P("(1 2 3 4)", 4), P("(1 3)", 4)});
  const CharacterTable& t = character_table(d4);
  CHECK(t.degrees == std::vector<long long>{1, 1, 1, 1, 2});
  const ClassFunction& chi = t.irreducibles[4];
  CHECK(chi.evaluate(Perm(4)) == Cyclotomic(2));
  CHECK(chi.evaluate(P("(1 3)(2 4)", 4)) == Cyclotomic(-2));
  CHECK(chi.evaluate(P("(1 2 3 4)", 4)) == Cyclotomic(0));
  CHECK(chi.evaluate(P("(1 3)", 4)) == Cyclotomic(0));
  CHECK(chi.evaluate(P("(1 2)(3 4)", 4)) == Cyclotomic(0));
}

TEST_CASE("first row is always trivial, rows sorted by degree") {
  for (const std::string& spec : {"S(4)", "A(5)", "D(5)", "Heis(3)", "C(12)", "AGL1(8)"}) {
    Group g = make(spec);
    const CharacterTable& t = character_table(g);
    CHECK(t.irreducibles[0] == trivial_character(g));
    CHECK(std::is_sorted(t.degrees.begin(), t.degrees.end()));
    long long sum_sq = 0;
    for (long long d : t.degrees) {
      sum_sq += d * d;
      CHECK(static_cast<long long>(g.order()) % d == 0);
    }
    CHECK(sum_sq == static_cast<long long>(g.order()));
  }
}

TEST_CASE("symmetric group tables are rational") {
  for (const std::string& spec : {"S(3)", "S(4)"}) {
    const CharacterTable& t = character_table(make(spec));
    for (const auto& chi : t.irreducibles)
      for (const auto& v : chi.values()) CHECK(v.is_rational());
  }
}

TEST_CASE("dihedral order-10 table has the golden-ratio rows") {
  Group d5 = make("D(5)");
  const CharacterTable& t = character_table(d5);
  CHECK(t.degrees == std::vector<long long>{1, 1, 2, 2});
  // value at a rotation class is zeta + zeta^-1 for a fifth root
  Perm r = P("(1 2 3 4 5)", 5);
  Cyclotomic expect1 = Cyclotomic::root(5, 1) + Cyclotomic::root(5, 4);
  Cyclotomic expect2 = Cyclotomic::root(5, 2) + Cyclotomic::root(5, 3);
  std::vector<Cyclotomic> got = {t.irreducibles[2].evaluate(r), t.irreducibles[3].evaluate(r)};
  bool match = (got[0] == expect1 && got[1] == expect2) ||
               (got[0] == expect2 && got[1] == expect1);
  CHECK(match);
}

TEST_CASE("trivial group table") {
  const CharacterTable& t = character_table(make("C(1)"));
  REQUIRE(t.irreducibles.size() == 1);
  CHECK(t.degrees == std::vector<long long>{1});
}

TEST_CASE("tables are memoized per element set") {
  Group g1 = make("D(6)");
  Group g2 = make("D(6)");
  std::size_t before = character_tables_computed();
  const CharacterTable& t1 = character_table(g1);
  const CharacterTable& t2 = character_table(g2);
  CHECK(&t1 == &t2);
  CHECK(character_tables_computed() <= before + 1);
}

TEST_CASE("table digest is stable") {
  const CharacterTable& t = character_table(make("S(4)"));
  CHECK(table_digest(t) == table_digest(t));
  const CharacterTable& u = character_table(make("S(3)"));
  CHECK(table_digest(t) != table_digest(u));
}

TEST_CASE("psl2 tables match the generic shape") {
  // degrees for PSL2(5): 1, q=5, (q+1)=6 family absent at this size;
  // classical values: {1, 3, 3, 4, 5}
  CHECK(degrees_of("PSL2(5)") == std::vector<long long>{1, 3, 3, 4, 5});
  // PSL2(7): {1, 3, 3, 6, 7, 8}
  CHECK(degrees_of("PSL2(7)") == std::vector<long long>{1, 3, 3, 6, 7, 8});
}

TEST_CASE("the degree-3 rows of PSL2(7) take quadratic Gauss sum values") {
  Group g = make("PSL2(7)");
  const CharacterTable& t = character_table(g);
  int order7_class = -1;
  const auto& classes = g.classes();
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (classes[k].representative.order() == 7) order7_class = static_cast<int>(k);
  REQUIRE(order7_class >= 0);
  // (-1 +- sqrt(-7))/2, written as sums of seventh roots over the squares
  // and non-squares mod 7
  Cyclotomic a = Cyclotomic::root(7, 1) + Cyclotomic::root(7, 2) + Cyclotomic::root(7, 4);
  Cyclotomic b = Cyclotomic::root(7, 3) + Cyclotomic::root(7, 5) + Cyclotomic::root(7, 6);
  for (std::size_t i = 0; i < t.degrees.size(); ++i) {
    if (t.degrees[i] != 3) continue;
    Cyclotomic v = t.irreducibles[i].at_class(order7_class);
    CHECK((v == a || v == b));
  }
}
