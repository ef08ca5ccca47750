#include <doctest.h>

#include "cubinf/germ.hpp"
#include "cubinf/parser.hpp"
#include "test_util.hpp"

using namespace cubinf;
using testutil::Rng;

namespace {

PolyQ g3(const std::string& s) { return parse_poly(s, {"x", "y", "z"}); }
PolyQ g2(const std::string& s) { return parse_poly(s, {"u", "v"}); }

const std::vector<Rat> kOrigin3{Rat(0), Rat(0), Rat(0)};
const std::vector<Rat> kOrigin2{Rat(0), Rat(0)};

long mu3(const PolyQ& f, int nmax = kDefaultJetOrder) {
  auto r = local_milnor(f, std::span<const Rat>(kOrigin3), nmax);
  REQUIRE(r.isolated);
  return r.mu;
}

// the simple-singularity normal forms in three variables
struct NormalForm {
  std::string text;
  LocalType type;
};
const std::vector<NormalForm>& normal_forms() {
  static const std::vector<NormalForm> forms = [] {
    std::vector<NormalForm> v;
    for (int k = 1; k <= 8; ++k)
      v.push_back({"x^" + std::to_string(k + 1) + " + y^2 + z^2", LocalType::A(k)});
    for (int k = 4; k <= 8; ++k)
      v.push_back({"x^" + std::to_string(k - 1) + " + x*y^2 + z^2", LocalType::D(k)});
    v.push_back({"x^3 + y^4 + z^2", LocalType::E(6)});
    v.push_back({"x^3 + x*y^3 + z^2", LocalType::E(7)});
    v.push_back({"x^3 + y^5 + z^2", LocalType::E(8)});
    return v;
  }();
  return forms;
}

}  // namespace

TEST_SUITE("germ") {
  TEST_CASE("Morse point") { CHECK(mu3(g3("x^2 + y^2 + z^2")) == 1); }

  TEST_CASE("A_k chain") {
    for (int k = 1; k <= 8; ++k) {
      PolyQ f = g3("x^" + std::to_string(k + 1) + " + y^2 + z^2");
      CHECK(mu3(f) == k);
    }
  }

  TEST_CASE("non-isolated germ never stabilizes") {
    auto r = local_milnor(g3("x^2*y"), std::span<const Rat>(kOrigin3));
    CHECK(!r.isolated);
  }

  TEST_CASE("non-critical point gives 0") {
    auto r = local_milnor(g3("x + x^3 + y^2"), std::span<const Rat>(kOrigin3));
    CHECK(r.isolated);
    CHECK(r.mu == 0);
  }

  TEST_CASE("milnor number away from the origin") {
    // critical points of x^3 - 3x + y^2 + z^2 sit at x = +-1
    std::vector<Rat> p{Rat(1), Rat(0), Rat(0)};
    auto r = local_milnor(g3("x^3 - 3*x + y^2 + z^2"), std::span<const Rat>(p));
    CHECK(r.isolated);
    CHECK(r.mu == 1);
  }

  TEST_CASE("corank") {
    CHECK(corank_at(g3("x^3 + y^4 + z^2"), std::span<const Rat>(kOrigin3)) == 2);
    CHECK(corank_at(g3("x^2 + y^2 + z^2"), std::span<const Rat>(kOrigin3)) == 0);
    CHECK(corank_at(g3("x*y + x^3 + y^3 + z^3"), std::span<const Rat>(kOrigin3)) == 1);
  }

  TEST_CASE("residual cubic structures") {
    CHECK(residual_cubic(g3("z^2 + x^3 + y^3 + x*y*z"), std::span<const Rat>(kOrigin3)) ==
          CubicRootStructure::ThreeDistinct);
    CHECK(residual_cubic(g3("z^2 + x^2*y"), std::span<const Rat>(kOrigin3)) ==
          CubicRootStructure::DoubleSimple);
    CHECK(residual_cubic(g3("z^2 + x^3"), std::span<const Rat>(kOrigin3)) ==
          CubicRootStructure::Triple);
    CHECK_THROWS_AS(residual_cubic(g3("x^2 + y^2 + z^2"), std::span<const Rat>(kOrigin3)),
                    MathError);
  }

  TEST_CASE("ade recognition of every normal form") {
    for (auto& nf : normal_forms()) {
      GermAnalysis a = ade_classify(g3(nf.text), std::span<const Rat>(kOrigin3));
      CHECK(a.recognized == nf.type);
      CHECK(*a.milnor == nf.type.milnor());
    }
  }

  TEST_CASE("examples with explicit data") {
    GermAnalysis e6 = ade_classify(g3("x^3 + y^4 + z^2"), std::span<const Rat>(kOrigin3));
    CHECK(e6.recognized == LocalType::E(6));
    CHECK(*e6.milnor == 6);
    CHECK(e6.corank == 2);
    CHECK(*e6.residual == CubicRootStructure::Triple);
    for (int k : {4, 5}) {
      GermAnalysis d = ade_classify(
          g3("x^" + std::to_string(k - 1) + " + x*y^2 + z^2"), std::span<const Rat>(kOrigin3));
      CHECK(d.recognized == LocalType::D(k));
      CHECK(*d.milnor == k);
    }
    GermAnalysis a4 = ade_classify(g3("x^5 + y^2 + z^2"), std::span<const Rat>(kOrigin3));
    CHECK(a4.recognized == LocalType::A(4));
    CHECK(a4.corank == 1);
    GermAnalysis smooth = ade_classify(g3("x + y^2"), std::span<const Rat>(kOrigin3));
    CHECK(smooth.recognized == LocalType::A(0));
    GermAnalysis noniso = ade_classify(g3("x^2*y"), std::span<const Rat>(kOrigin3));
    CHECK(noniso.recognized == LocalType::non_isolated());
  }

  TEST_CASE("corank-2 zero residual is not simple") {
    GermAnalysis x9 = ade_classify(g3("x^2 + y^4 + z^4"), std::span<const Rat>(kOrigin3));
    CHECK(x9.recognized == LocalType::non_simple());
    CHECK(*x9.residual == CubicRootStructure::Zero);
  }

  TEST_CASE("invariance under random linear coordinate changes") {
    Rng rng(101);
    for (auto& nf : normal_forms()) {
      PolyQ f = g3(nf.text);
      for (int trial = 0; trial < 4; ++trial) {
        MatQ m = rng.gl3();
        std::vector<PolyQ> images;
        for (int i = 0; i < 3; ++i) {
          PolyQ im(3);
          for (int j = 0; j < 3; ++j) {
            Mono mo(3);
            mo.e[j] = 1;
            im.add_term(mo, m.a[i][j]);
          }
          images.push_back(im);
        }
        PolyQ ft = f.substitute(images);
        GermAnalysis a = ade_classify(ft, std::span<const Rat>(kOrigin3));
        CHECK(a.recognized == nf.type);
      }
    }
  }

  TEST_CASE("stabilization is genuine: higher jet order agrees") {
    for (auto& nf : normal_forms()) {
      PolyQ f = g3(nf.text);
      CHECK(mu3(f, 16) == mu3(f, 24));
    }
  }

  TEST_CASE("curve milnor numbers") {
    auto mu2 = [](const PolyQ& f) {
      auto r = curve_local_milnor(f, std::span<const Rat>(kOrigin2));
      REQUIRE(r.isolated);
      return r.mu;
    };
    CHECK(mu2(g2("u*v")) == 1);
    CHECK(mu2(g2("u^2 - v^3")) == 2);
    CHECK(mu2(g2("u^3 + v^3")) == 4);
  }

  TEST_CASE("quasihomogeneity") {
    std::vector<int> w{4, 3, 6};
    CHECK(quasihomogeneous_check(g3("x^3 + y^4 + z^2"), std::span<const int>(w), 12) ==
          QHClass::Quasihomogeneous);
    std::vector<int> w1{1, 1, 1};
    CHECK(quasihomogeneous_check(g3("x^2 + y^2 + z^2"), std::span<const int>(w1), 2) ==
          QHClass::Quasihomogeneous);
    CHECK(quasihomogeneous_check(g3("x^3 + y^4 + z^2 + y^5"), std::span<const int>(w), 12) ==
          QHClass::SemiQuasihomogeneous);
    CHECK(quasihomogeneous_check(g3("x^3 + y^4 + z^2 + y^2"), std::span<const int>(w), 12) ==
          QHClass::Neither);
    // the normal forms scale with their listed weights
    struct W {
      std::string f;
      std::vector<int> w;
      int d;
    };
    for (auto& c : std::vector<W>{{"x^5 + y^2 + z^2", {2, 5, 5}, 10},
                                  {"x^3 + x*y^2 + z^2", {2, 2, 3}, 6},
                                  {"x^3 + x*y^3 + z^2", {6, 4, 9}, 18},
                                  {"x^3 + y^5 + z^2", {10, 6, 15}, 30}}) {
      CHECK(quasihomogeneous_check(g3(c.f), std::span<const int>(c.w), c.d) ==
            QHClass::Quasihomogeneous);
    }
  }

  TEST_CASE("extension-field germ: A1 pair over a quadratic field") {
    // f = x^2 + y^2 + z^2 - s*z^3 over Q[s]/(s^2-2) still has a Morse point
    auto fld = std::make_shared<const NumberField>(UPoly({Rat(-2), Rat(0), Rat(1)}));
    PolyE f = embed(g3("x^2 + y^2 + z^2"), fld);
    f.add_term(Mono({0, 0, 3}), AlgElem::generator(fld));
    std::vector<AlgElem> origin{AlgElem(), AlgElem(), AlgElem()};
    GermAnalysis a = ade_classify(f, std::span<const AlgElem>(origin));
    CHECK(a.recognized == LocalType::A(1));
  }
}
