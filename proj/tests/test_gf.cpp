#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pnc/gf.hpp"

using pnc::GaloisField;

TEST_CASE("prime field arithmetic") {
  GaloisField f(3, 1);
  CHECK(f.size() == 3);
  CHECK(f.mul(2, 2) == 1);
  CHECK(f.add(2, 2) == 1);
  CHECK(f.inv(2) == 2);
}

TEST_CASE("GF(9) generator and inverses") {
  GaloisField f(3, 2);
  CHECK(f.size() == 9);
  long g = f.generator();
  CHECK(f.pow(g, 8) == f.one());
  CHECK(f.pow(g, 4) != f.one());
  for (long x = 1; x < 9; ++x) CHECK(f.mul(x, f.inv(x)) == f.one());
  // deterministic defining polynomial: x^2 + 1 is the lexicographically
  // smallest monic irreducible over Z/3
  CHECK(f.defining_polynomial() == std::vector<long>{1, 0});
}

TEST_CASE("field axioms, exhaustive over small fields") {
  for (auto [p, k] : {std::pair<long, int>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2},
                      {5, 1}, {5, 2}, {7, 2}, {7, 1}, {2, 4}, {3, 3}}) {
    GaloisField f(p, k);
    const long q = f.size();
    REQUIRE(q <= 49);
    for (long a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
      for (long b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (long c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    CHECK(f.element_order(f.generator()) == q - 1);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(GaloisField(4, 1), std::domain_error);  // not prime
  CHECK_THROWS_AS(GaloisField(2, 12), std::domain_error); // exceeds bound
  CHECK_THROWS_AS(GaloisField(3, 0), std::domain_error);
  GaloisField f(2, 3);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("powers and integer embedding") {
  GaloisField f(5, 2);
  CHECK(f.from_int(7) == 2);
  CHECK(f.from_int(-1) == 4);
  long g = f.generator();
  CHECK(f.pow(g, 24) == f.one());
  CHECK(f.pow(g, -1) == f.inv(g));
  CHECK(f.element_order(f.pow(g, 8)) == 3); // order-(p+1)/2 multiplier of FSemi(5)
}
