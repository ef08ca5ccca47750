#include <doctest.h>

#include "cubinf/field.hpp"

using namespace cubinf;

TEST_SUITE("field") {
  TEST_CASE("quadratic extension arithmetic") {
    // Q[s]/(s^2 - 2)
    auto f = std::make_shared<const NumberField>(UPoly({Rat(-2), Rat(0), Rat(1)}));
    AlgElem s = AlgElem::generator(f);
    CHECK(s * s == AlgElem(Rat(2)));
    AlgElem x = s + AlgElem(Rat(1));          // 1 + s
    AlgElem y = x * x;                        // 3 + 2s
    CHECK(y == AlgElem(f, {Rat(3), Rat(2)}));
    CHECK(x * x.inv() == AlgElem(Rat(1)));
    CHECK((s.inv() * s) == AlgElem(Rat(1)));
  }

  TEST_CASE("rational coercion") {
    auto f = std::make_shared<const NumberField>(UPoly({Rat(-2), Rat(0), Rat(1)}));
    AlgElem s = AlgElem::generator(f);
    AlgElem z = s * AlgElem(Rat(0));
    CHECK(z.is_zero());
    CHECK((s + AlgElem(Rat(1, 2)) - s) == AlgElem(Rat(1, 2)));
  }

  TEST_CASE("zero divisor in a reducible modulus carries a factor") {
    // s^2 - 1 is squarefree but reducible; (s - 1) is a zero divisor
    auto f = std::make_shared<const NumberField>(UPoly({Rat(-1), Rat(0), Rat(1)}));
    AlgElem bad = AlgElem(f, {Rat(-1), Rat(1)});
    try {
      (void)bad.inv();
      FAIL("expected ZeroDivisorError");
    } catch (const ZeroDivisorError& e) {
      CHECK(e.factor.deg() == 1);
      CHECK(e.factor.eval_rat(Rat(1)).is_zero());
    }
  }

  TEST_CASE("non-squarefree modulus is rejected") {
    CHECK_THROWS_AS(NumberField(UPoly({Rat(0), Rat(0), Rat(1)})), MathError);
  }

  TEST_CASE("cubic extension inverse") {
    // Q[s]/(s^3 - 2): inverse of s is s^2/2
    auto f = std::make_shared<const NumberField>(UPoly({Rat(-2), Rat(0), Rat(0), Rat(1)}));
    AlgElem s = AlgElem::generator(f);
    CHECK(s.inv() == AlgElem(f, {Rat(0), Rat(0), Rat(1, 2)}));
    AlgElem u = s * s - s + AlgElem(Rat(3));
    CHECK(u * u.inv() == AlgElem(Rat(1)));
  }

  TEST_CASE("polynomials over an extension") {
    auto f = std::make_shared<const NumberField>(UPoly({Rat(-2), Rat(0), Rat(1)}));
    PolyE p(2);
    p.add_term(Mono({1, 0}), AlgElem::generator(f));
    p.add_term(Mono({0, 1}), AlgElem(Rat(1)));
    PolyE q = p * p;  // 2 x^2 + 2 s x y + y^2
    CHECK(q.coeff(Mono({2, 0})) == AlgElem(Rat(2)));
    CHECK(q.coeff(Mono({1, 1})) == AlgElem(f, {Rat(0), Rat(2)}));
  }
}
