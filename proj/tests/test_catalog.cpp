#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pnc/catalog.hpp"
#include "pnc/gf.hpp"

using namespace pnc;

namespace {
Group make(const std::string& spec) { return make_group(spec).group; }
}

TEST_CASE("spec parsing") {
  GroupSpec s = parse_spec("S(4)");
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].family == "S");
  CHECK(s.factors[0].params == std::vector<long>{4});

  GroupSpec prod = parse_spec("C(2) x C(4)");
  REQUIRE(prod.factors.size() == 2);
  CHECK(prod.factors[1].params == std::vector<long>{4});

  CHECK(parse_spec("AGL1(27)").factors[0].family == "AGL1");
  CHECK(parse_spec("  Ab( 2 , 3 )x Q8 ").factors.size() == 2);
  CHECK(parse_spec("PSL33").factors[0].params.empty());

  CHECK_THROWS_AS(parse_spec("Foo(3)"), SpecParseError);
  CHECK_THROWS_AS(parse_spec("S(4"), SpecParseError);
  CHECK_THROWS_AS(parse_spec("S()"), SpecParseError);
  CHECK_THROWS_AS(parse_spec("S"), SpecParseError);
  CHECK_THROWS_AS(parse_spec("Q8(3)"), SpecParseError);
  CHECK_THROWS_AS(parse_spec("S(4) y C(2)"), SpecParseError);
  try {
    parse_spec("S(4) x Foo(1)");
    CHECK(false);
  } catch (const SpecParseError& e) {
    CHECK(e.offset == 7);
  }
}

TEST_CASE("render and reparse round trip") {
  for (const std::string& text : {"S(4)", "C(2) x D(4)", "Ab(2,3,4)", "Q8", "Q8 x C(3)"}) {
    GroupSpec s = parse_spec(text);
    GroupSpec again = parse_spec(s.render());
    CHECK(s.render() == again.render());
    CHECK(make_group(s).group.same_elements(make_group(again).group));
  }
}

TEST_CASE("family orders match closed forms") {
  CHECK(make("S(4)").order() == 24);
  CHECK(make("S(1)").order() == 1);
  CHECK(make("A(4)").order() == 12);
  CHECK(make("A(5)").order() == 60);
  CHECK(make("A(7)").order() == 2520);
  CHECK(make("C(12)").order() == 12);
  CHECK(make("D(6)").order() == 12);
  CHECK(make("Q8").order() == 8);
  CHECK(make("Ab(2,3)").order() == 6);
  CHECK(make("Ab(2,3)").is_cyclic()); // C_2 x C_3 = C_6
  CHECK(make("Heis(3)").order() == 27);
  CHECK(make("Heis(3)").exponent() == 3);
  CHECK(!make("Heis(3)").is_abelian());
  CHECK(make("AGL1(9)").order() == 72);
  CHECK(make("AGL1(27)").order() == 702);
  CHECK(make("PSL2(7)").order() == 168);
  CHECK(make("PSL2(7)").degree() == 8);
  CHECK(make("PSL2(13)").order() == 1092);
  CHECK(make("PSL33").order() == 5616);
  CHECK(make("PSL33").degree() == 13);
  CHECK(make("FSemi(5)").order() == 75);
  CHECK(make("C(2) x D(4)").order() == 16);
}

TEST_CASE("unsupported parameters are rejected") {
  CHECK_THROWS_AS(make("S(9)"), std::domain_error);
  CHECK_THROWS_AS(make("S(8)"), BoundExceeded); // order 40320 over the closure bound
  CHECK_THROWS_AS(make("D(2)"), std::domain_error);
  CHECK_THROWS_AS(make("Heis(4)"), std::domain_error);
  CHECK_THROWS_AS(make("AGL1(6)"), std::domain_error); // not a prime power
  CHECK_THROWS_AS(make("PSL2(16)"), std::domain_error);
  CHECK_THROWS_AS(make("FSemi(7)"), std::domain_error); // 7 = 3 mod 4
}

TEST_CASE("Q8 has a unique involution") {
  Group q8 = make("Q8");
  int involutions = 0;
  for (const Perm& e : q8.elements())
    if (e.order() == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("AGL1(q) structure") {
  for (long q : {5L, 8L, 9L}) {
    MadeGroup made = make_group("AGL1(" + std::to_string(q) + ")");
    const Group& g = made.group;
    CHECK(g.order() == static_cast<std::size_t>(q * (q - 1)));
    CHECK(g.is_metabelian());
    Group d = g.derived_subgroup();
    CHECK(d.order() == static_cast<std::size_t>(q));
    CHECK(d.is_abelian());
    // elementary abelian: every nonidentity element has prime order
    long p = 2;
    while (q % p != 0) ++p;
    for (const Perm& e : d.elements())
      if (!e.is_identity()) CHECK(e.order() == p);
    CHECK(is_transitive(g));
  }
}

TEST_CASE("PSL2(q) is transitive and simple for small q") {
  for (long q : {4L, 5L, 7L, 8L, 9L}) {
    Group g = make("PSL2(" + std::to_string(q) + ")");
    std::size_t expected = static_cast<std::size_t>(q * (q * q - 1) / (q % 2 == 0 ? 1 : 2));
    CHECK(g.order() == expected);
    CHECK(is_transitive(g));
    // simplicity: the normal closure of every nonidentity class
    // representative is the whole group
    for (const auto& c : g.classes()) {
      if (c.representative.is_identity()) continue;
      CHECK(normal_closure(g, {c.representative}).order() == g.order());
    }
  }
}

TEST_CASE("PSL33 exposes the order-8 dihedral generator pair") {
  MadeGroup made = make_group("PSL33");
  REQUIRE(made.named.count("r"));
  REQUIRE(made.named.count("f"));
  const Perm& r = made.named.at("r");
  const Perm& f = made.named.at("f");
  CHECK(r.order() == 4);
  CHECK(f.order() == 2);
  CHECK(conjugate(r, f) == r.inverse());
  CHECK(Group::generate({r, f}).order() == 8);
}

TEST_CASE("FSemi(5) is the field semidirect product") {
  MadeGroup made = make_group("FSemi(5)");
  const Group& g = made.group;
  CHECK(g.degree() == 25);
  Group d = g.derived_subgroup();
  CHECK(d.order() == 25);
  CHECK(abelian_invariants(d) == std::vector<long>{5, 5});
}

TEST_CASE("products embed factors on disjoint points") {
  Group g = make("C(2) x D(4)");
  CHECK(g.degree() == 6);
  CHECK(g.order() == 16);
  CHECK(!g.is_abelian());
  Group h = make("S(3) x C(3)");
  CHECK(h.order() == 18);
  CHECK(orbits(h).size() == 2);
}

TEST_CASE("catalog specs all parse") {
  for (const std::string& s : catalog_specs()) CHECK_NOTHROW(parse_spec(s));
}
