#include <doctest.h>

#include "cubinf/rational.hpp"
#include "cubinf/univariate.hpp"

using namespace cubinf;

TEST_SUITE("rational") {
  TEST_CASE("reduction and canonical form") {
    Rat r(6, -4);
    CHECK(r == Rat(-3, 2));
    CHECK(r.den() == 2);
    CHECK(r.num() == -3);
    CHECK(Rat(0, 5).is_zero());
    CHECK(Rat(0, 5).den() == 1);
  }

  TEST_CASE("arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(7, 3).inv() == Rat(3, 7));
    CHECK(Rat(-2).pow(3) == Rat(-8));
    CHECK_THROWS_AS(Rat(1).operator/(Rat(0)), MathError);
  }

  TEST_CASE("exact roots") {
    CHECK(*Rat(9, 4).sqrt_exact() == Rat(3, 2));
    CHECK(!Rat(2).sqrt_exact().has_value());
    CHECK(!Rat(-1).sqrt_exact().has_value());
    CHECK(*Rat(-27, 8).cbrt_exact() == Rat(-3, 2));
    CHECK(!Rat(4).cbrt_exact().has_value());
  }

  TEST_CASE("parse and print") {
    CHECK(Rat::parse("-7/21") == Rat(-1, 3));
    CHECK(Rat(5, 3).str() == "5/3");
    CHECK(Rat(-4, 2).str() == "-2");
  }

  TEST_CASE("univariate gcd and squarefree part") {
    // (t-1)^2 (t+2)
    UPoly p({Rat(2), Rat(-3), Rat(0), Rat(1)});
    UPoly sf = squarefree_part(p);
    CHECK(sf.deg() == 2);
    CHECK(sf.eval_rat(Rat(1)).is_zero());
    CHECK(sf.eval_rat(Rat(-2)).is_zero());
    auto roots = rational_roots(p);
    CHECK(roots.size() == 2);
  }

  TEST_CASE("rational roots of integer polynomials") {
    // 6t^2 - 5t + 1 = (2t-1)(3t-1)
    UPoly p({Rat(1), Rat(-5), Rat(6)});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rat(1, 3));
    CHECK(roots[1] == Rat(1, 2));
  }

  TEST_CASE("factor splits rational and quadratic parts") {
    // t^3 - 2t = t (t^2 - 2)
    UPoly p({Rat(0), Rat(-2), Rat(0), Rat(1)});
    auto f = factor_squarefree(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].deg() == 1);
    CHECK(f.factors[1].deg() == 2);
    CHECK(f.complete);
  }
}
