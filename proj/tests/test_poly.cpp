#include <doctest.h>

#include "cubinf/affine.hpp"
#include "cubinf/parser.hpp"
#include "cubinf/poly.hpp"
#include "test_util.hpp"

using namespace cubinf;
using testutil::Rng;

namespace {
PolyQ p3(const std::string& s) { return parse_poly3(s); }
}

TEST_SUITE("poly") {
  TEST_CASE("difference of squares") {
    CHECK(arith(p3("x0 + x1"), p3("x0 - x1"), PolyBinOp::Mul) == p3("x0^2 - x1^2"));
  }

  TEST_CASE("additive identity") {
    PolyQ p = p3("x0^2 - 3*x1 + 1/2");
    CHECK(arith(p, PolyQ(3), PolyBinOp::Add) == p);
  }

  TEST_CASE("trinomial cube has the multinomial term count") {
    PolyQ s = p3("x0 + x1 + x2");
    // brute-force expansion by repeated multiplication
    PolyQ cube = s * s * s;
    CHECK(cube.term_count() == 10);
    CHECK(cube == s.pow(3));
  }

  TEST_CASE("context mismatch is an error") {
    CHECK_THROWS_AS(arith(p3("x0"), PolyQ(2), PolyBinOp::Add), ContextError);
  }

  TEST_CASE("ring axioms on random triples") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
      PolyQ a = rng.poly(3, 3, 4), b = rng.poly(3, 3, 4), c = rng.poly(3, 3, 4);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
  }

  TEST_CASE("gradient") {
    CHECK(p3("x0*x1*x2").gradient() ==
          std::vector<PolyQ>{p3("x1*x2"), p3("x0*x2"), p3("x0*x1")});
    CHECK(p3("5").gradient() == std::vector<PolyQ>{PolyQ(3), PolyQ(3), PolyQ(3)});
    // nodal cubic
    CHECK(p3("x0^3 + x1^3 + x0*x1*x2").gradient() ==
          std::vector<PolyQ>{p3("3*x0^2 + x1*x2"), p3("3*x1^2 + x0*x2"), p3("x0*x1")});
  }

  TEST_CASE("homogenize and dehomogenize") {
    PolyQ f = parse_poly("x0 + x0^3", {"x0"});
    PolyQ F = f.homogenized(3);
    CHECK(F.is_homogeneous());
    CHECK(F.degree() == 3);
    CHECK(F == parse_poly("x0*x1^2 + x0^3", {"x0", "x1"}));
    CHECK(F.dehomogenized() == f);
    // constant
    CHECK(PolyQ(1, Rat(1)).homogenized(3) == parse_poly("x1^3", {"x0", "x1"}));
    CHECK_THROWS_AS(p3("x0^2").homogenized(1), DegreeError);
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
      PolyQ g = rng.poly(3, 3, 6);
      CHECK(g.homogenized(3).dehomogenized() == g);
    }
  }

  TEST_CASE("substitute_affine translation and identity") {
    // T = translation x0 -> x0 + 1, so the result is p(x0 - 1, ...)
    AffineMap t = AffineMap::translation({Rat(1), Rat(0), Rat(0)});
    CHECK(substitute_affine(p3("x0"), t) == p3("x0 - 1"));
    CHECK(substitute_affine(p3("x0^2 + x1*x2"), AffineMap::identity()) == p3("x0^2 + x1*x2"));
  }

  TEST_CASE("substitute_affine composition law") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
      PolyQ p = rng.poly(3, 3, 5);
      AffineMap m1 = rng.affine(), m2 = rng.affine();
      CHECK(substitute_affine(substitute_affine(p, m1), m2) ==
            substitute_affine(p, m2.compose(m1)));
    }
  }

  TEST_CASE("substitute_affine is a ring homomorphism") {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
      PolyQ p = rng.poly(3, 2, 4), q = rng.poly(3, 2, 4);
      AffineMap m = rng.affine();
      AffineMap unscaled(m.linear_part(), m.translation_part(), Rat(1));
      CHECK(substitute_affine(p * q, unscaled) ==
            substitute_affine(p, unscaled) * substitute_affine(q, unscaled));
    }
  }

  TEST_CASE("singular map is rejected") {
    MatQ z(3, 3);
    CHECK_THROWS_AS(AffineMap(z, {Rat(0), Rat(0), Rat(0)}, Rat(1)), InvalidMapError);
    CHECK_THROWS_AS(AffineMap(MatQ::identity(3), {Rat(0), Rat(0), Rat(0)}, Rat(0)),
                    InvalidMapError);
  }

  TEST_CASE("hessian rank") {
    std::vector<Rat> origin{Rat(0), Rat(0), Rat(0)};
    CHECK(hessian_rank_at(p3("x0^2 + x1^2 + x2^2"), std::span<const Rat>(origin)) == 3);
    CHECK(hessian_rank_at(p3("x0^3"), std::span<const Rat>(origin)) == 0);
    std::vector<Rat> pt{Rat(1), Rat(0), Rat(0)};
    CHECK(hessian_rank_at(p3("x0*x1^2"), std::span<const Rat>(pt)) == 1);
  }

  TEST_CASE("cubic discriminant") {
    // (s-1)^2 (s+2) has a repeated root
    PolyQ q1 = parse_poly("s^3 - 3*s + 2", {"s"});
    CHECK(cubic_discriminant(q1, 0).is_zero());
    PolyQ q2 = parse_poly("s^3 - s", {"s"});
    CHECK(!cubic_discriminant(q2, 0).is_zero());
    CHECK_THROWS_AS(cubic_discriminant(parse_poly("s^2 - 1", {"s"}), 0), DegreeError);
    // discriminant of a0*x0*x3^2 - x0^3 - t*x3^3 in x0 is proportional to 27t^2 - 4a0^3
    PolyQ q3 = parse_poly("a0*x0*x3^2 - x0^3 - t*x3^3", {"x0", "x3", "a0", "t"});
    PolyQ disc = cubic_discriminant(q3, 0);
    PolyQ expect = parse_poly("27*t^2*x3^6 - 4*a0^3*x3^6", {"x0", "x3", "a0", "t"});
    CHECK(disc == -expect);
  }

  TEST_CASE("gcd of a cubic with its derivative detects the discriminant zero") {
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
      UPoly q({rng.rat(), rng.rat(), rng.rat(), rng.nonzero_rat()});
      PolyQ qp = poly_from_upoly(q);
      bool disc_zero = cubic_discriminant(qp, 0).is_zero();
      UPoly g = gcd_monic(q, q.derivative());
      CHECK(disc_zero == (g.deg() > 0));
    }
  }

  TEST_CASE("binary cubic root structure") {
    auto q = [](const std::string& s) { return parse_poly(s, {"u", "v"}); };
    CHECK(binary_cubic_root_structure(q("u^3 + v^3")) == CubicRootStructure::ThreeDistinct);
    CHECK(binary_cubic_root_structure(q("u^2*v")) == CubicRootStructure::DoubleSimple);
    CHECK(binary_cubic_root_structure(q("u^3")) == CubicRootStructure::Triple);
    CHECK(binary_cubic_root_structure(q("u*v^2 + u^2*v")) == CubicRootStructure::ThreeDistinct);
    CHECK(binary_cubic_root_structure(PolyQ(2)) == CubicRootStructure::Zero);
    CHECK_THROWS_AS(binary_cubic_root_structure(q("u^2 + v")), ShapeError);
  }
}
