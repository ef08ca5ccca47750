#include <doctest.h>

#include "cubinf/infinity.hpp"
#include "cubinf/pipeline.hpp"
#include "cubinf/tables.hpp"
#include "test_util.hpp"

using namespace cubinf;
using testutil::Rng;

namespace {

ReducedForm reduce_instance(CubicType ct, const std::array<Rat, 9>& a) {
  PolyQ f = instance_polynomial(ct, a);
  NormalizingMap nm = normalizing_map(f.degree_part(3));
  REQUIRE(nm.available);
  return reduce_coefficients(f, ct, nm.map);
}

std::array<Rat, 9> arr(std::initializer_list<long> v) {
  std::array<Rat, 9> a;
  int i = 0;
  for (long x : v) a[i++] = Rat(x);
  return a;
}

}  // namespace

TEST_SUITE("tables") {
  TEST_CASE("reduction kills the designated quadratic monomials") {
    // nodal with a quadratic term a3 x0^2 on top of the normal form
    PolyQ f = instance_polynomial(CubicType::Nodal, arr({0, 0, 0, 1, 0, 0, 0, 0, 0}));
    NormalizingMap nm = normalizing_map(f.degree_part(3));
    ReducedForm rf = reduce_coefficients(f, CubicType::Nodal, nm.map);
    CHECK(rf.a[3].is_zero());
    CHECK(rf.a[4].is_zero());
    CHECK(rf.a[6].is_zero());
    CHECK(substitute_affine(f, rf.applied) ==
          rf.f_reduced + PolyQ(3, rf.constant));
    // an already reduced polynomial stays put
    PolyQ g = instance_polynomial(CubicType::Nodal, arr({1, 1, 1, 0, 0, 1, 0, 1, 0}));
    NormalizingMap nm2 = normalizing_map(g.degree_part(3));
    ReducedForm rf2 = reduce_coefficients(g, CubicType::Nodal, nm2.map);
    CHECK(rf2.f_reduced == g);
  }

  TEST_CASE("double line with vanishing boundary quadratic is not B-type") {
    // a3 = a5 = a8 = 0: f = x0 + x1^2?? keep the reduced shape: a7 = 1
    PolyQ f = instance_polynomial(CubicType::DoubleLine, arr({1, 0, 0, 0, 0, 0, 0, 1, 0}));
    NormalizingMap nm = normalizing_map(f.degree_part(3));
    CHECK_THROWS_AS(reduce_coefficients(f, CubicType::DoubleLine, nm.map), NotBTypeSignal);
  }

  TEST_CASE("infinity points per type") {
    // nodal, smooth at infinity when a8 != 0
    CHECK(infinity_points(reduce_instance(CubicType::Nodal, arr({1, 1, 1, 0, 0, 1, 0, 1, 1})))
              .empty());
    // triangle with all three corners singular
    auto tri = infinity_points(reduce_instance(CubicType::Triangle, arr({1, 1, 1, 0, 0, 0, 0, 0, 0})));
    CHECK(tri.size() == 3);
    // double line, normalized frame: Q = (1:0:0:0), R = (0:0:1:0)
    auto dl = infinity_points(reduce_instance(CubicType::DoubleLine, arr({1, 1, 1, 0, 0, 1, 0, 1, 0})));
    REQUIRE(dl.size() == 2);
    CHECK(std::get<P2Point>(dl[0]) == P2Point::make(Rat(1), Rat(0), Rat(0)));
    CHECK(std::get<P2Point>(dl[1]) == P2Point::make(Rat(0), Rat(0), Rat(1)));
  }

  TEST_CASE("worked nodal example dispatches to A2->A3 with gamma = -4") {
    ReducedForm rf = reduce_instance(CubicType::Nodal, arr({1, 1, 1, 0, 0, 1, 0, 1, 0}));
    Verdict v = table_classify(rf);
    CHECK(v.table_id == 1);
    CHECK(v.row_label == "A2->A3");
    CHECK(v.lambda_total == 1);
    CHECK(*v.mu == 4);
    CHECK(*v.b2 == 5);
    REQUIRE(v.events.size() == 1);
    // jump at t = gamma = -4
    CHECK(v.events[0].t_locus.eval_rat(Rat(-4)).is_zero());
    CHECK(v.events[0].special == LocalType::A(3));
  }

  TEST_CASE("cuspidal D4->E6 row") {
    ReducedForm rf = reduce_instance(CubicType::Cuspidal, arr({0, 1, 0, 0, 1, 0, 0, 0, 0}));
    Verdict v = table_classify(rf);
    CHECK(v.row_label == "D4->E6");
    CHECK(v.lambda_total == 2);
    CHECK(*v.mu == 0);
    CHECK(*v.b2 == 2);
    REQUIRE(v.events.size() == 1);
    CHECK(v.events[0].special == LocalType::E(6));
    CHECK(v.events[0].t_locus.eval_rat(Rat(0)).is_zero());
  }

  TEST_CASE("cuspidal D4->D5 has two special fibers") {
    ReducedForm rf = reduce_instance(CubicType::Cuspidal, arr({3, 2, 0, 0, 1, 0, 0, 0, 0}));
    Verdict v = table_classify(rf);
    CHECK(v.row_label == "D4->D5");
    CHECK(v.lambda_total == 2);
    REQUIRE(v.events.size() == 2);  // 27t^2 - 108 splits into t-2, t+2
    for (auto& e : v.events) {
      CHECK(e.jump_per_root == 1);
      CHECK(e.special == LocalType::D(5));
    }
  }

  TEST_CASE("conic chord smooth-at-infinity row") {
    ReducedForm rf = reduce_instance(CubicType::ConicChord, arr({1, 1, 1, 1, 0, 0, 1, 0, 1}));
    Verdict v = table_classify(rf);
    CHECK(v.row_label == "A0 A0");
    CHECK(*v.mu == 6);
    CHECK(*v.b2 == 6);
  }

  TEST_CASE("conic chord symmetric canonicalization") {
    // deep point on the R side: swap brings it to Q
    std::array<Rat, 9> a = arr({1, 1, 1, 1, 0, 0, 0, 0, 1});  // a8 != 0, a6 = 0
    a[1] = Rat(2);
    ReducedForm rf = reduce_instance(CubicType::ConicChord, a);
    Verdict v = table_classify(rf);
    CHECK(v.row_label == "A1 A0");
  }

  TEST_CASE("triangle permutation dispatch") {
    // deep corner on the S slot: a3 = a2?? put the A2 chain on x0's corner
    // a8 != 0, a3 = 0, a0 = 0: S deep
    ReducedForm rf = reduce_instance(CubicType::Triangle, arr({0, 1, 1, 0, 0, 0, 1, 0, 1}));
    Verdict v = table_classify(rf);
    CHECK(v.table_id == 6);
    CHECK(v.row_label == "A2->A3 A0 A0");
  }

  TEST_CASE("triangle untabulated combination goes to the oracle path") {
    // two deep corners: a2 = a8 = 0 and a1 = a6 = 0
    ReducedForm rf = reduce_instance(CubicType::Triangle, arr({1, 0, 0, 1, 0, 0, 0, 0, 0}));
    Verdict v = table_classify(rf);
    CHECK(v.row_label == "untabulated");
    CHECK(v.non_isolated);  // both deep corners degenerate at t = 0
    REQUIRE(v.points.size() == 2);
    CHECK(v.points[0].generic == LocalType::A(2));
    CHECK(v.points[1].generic == LocalType::A(2));
  }

  TEST_CASE("double line rows") {
    struct Case {
      std::array<Rat, 9> a;
      std::string row;
      std::optional<long> mu, b2;
    };
    std::vector<Case> cases = {
        {arr({1, 1, 1, 0, 0, 1, 0, 1, 1}), "A1 A1", 3, 3},
        {arr({1, 1, 1, 0, 0, 1, 0, 1, 0}), "A1 A2", 2, 2},
        {arr({1, 1, 1, 0, 0, 1, 0, 0, 0}), "A1 A3", 1, 1},
        {arr({1, 1, 0, 0, 0, 1, 0, 0, 0}), "A1 A4", 0, 0},
        {arr({1, 0, 0, 0, 0, 1, 0, 0, 0}), "A1 A5->oo", std::nullopt, std::nullopt},
        {arr({1, 1, 1, 0, 0, 0, 0, 0, 1}), "A3", 2, 2},
        {arr({0, 1, 1, 0, 0, 0, 0, 0, 1}), "D4->D5", 0, 1},
        {arr({0, 0, 1, 0, 0, 0, 0, 0, 1}), "D4->oo", std::nullopt, std::nullopt},
        {arr({1, 1, 1, 1, 0, 0, 0, 1, 0}), "A4", 1, 1},
        {arr({1, 1, 1, 1, 0, 0, 0, 0, 0}), "D5", 0, 0},
    };
    for (auto& c : cases) {
      ReducedForm rf = reduce_instance(CubicType::DoubleLine, c.a);
      Verdict v = table_classify(rf);
      CHECK_MESSAGE(v.row_label == c.row, "expected " << c.row << " got " << v.row_label);
      CHECK(v.mu == c.mu);
      CHECK(v.b2 == c.b2);
    }
  }

  TEST_CASE("double line D4->D5 jumps at t = -a2^2/(4 a8)") {
    ReducedForm rf = reduce_instance(CubicType::DoubleLine, arr({0, 1, 1, 0, 0, 0, 0, 0, 1}));
    Verdict v = table_classify(rf);
    REQUIRE(v.events.size() == 1);
    CHECK(v.events[0].t_locus.eval_rat(Rat(-1, 4)).is_zero());
  }

  TEST_CASE("double line with a conjugate boundary pair is A1 A1") {
    // gamma = a5^2 - 4 a3 a8 = 1 - 4*1*1 = -3, not a square
    ReducedForm rf = reduce_instance(CubicType::DoubleLine, arr({1, 1, 1, 1, 0, 1, 0, 1, 1}));
    Verdict v = table_classify(rf);
    CHECK(v.row_label == "A1 A1");
    REQUIRE(v.points.size() == 2);
    CHECK(v.points[0].generic == LocalType::A(1));
    CHECK(std::holds_alternative<P2PointExt>(v.points[0].pt));
  }

  TEST_CASE("triple line rows") {
    ReducedForm a2a2 = reduce_instance(CubicType::TripleLine, arr({1, 1, 1, 0, 1, 1, 0, 1, 0}));
    Verdict v1 = table_classify(a2a2);
    CHECK(v1.row_label == "A2 A2");
    CHECK(*v1.mu == 2);
    CHECK(*v1.b2 == 2);
    CHECK(v1.cls == ClassTag::BminusF);
    ReducedForm a5 = reduce_instance(CubicType::TripleLine, arr({1, 1, 1, 0, 1, 0, 0, 1, 1}));
    Verdict v2 = table_classify(a5);
    CHECK(v2.row_label == "A5");
    CHECK(*v2.mu == 1);
    ReducedForm oo = reduce_instance(CubicType::TripleLine, arr({1, 1, 1, 0, 0, 0, 0, 1, 1}));
    Verdict v3 = table_classify(oo);
    CHECK(v3.row_label == "oo");
    CHECK(v3.non_isolated);
  }

  TEST_CASE("triple line with conjugate pair still dispatches") {
    // a3 = 1, a5 = 1, a8 = -1: gamma = 5 nonsquare; resultant -1 - 1 + ... != 0
    ReducedForm rf = reduce_instance(CubicType::TripleLine, arr({1, 1, 1, 1, 1, 1, 0, 1, -1}));
    Verdict v = table_classify(rf);
    CHECK(v.row_label == "A2 A2");
    CHECK(std::holds_alternative<P2PointExt>(v.points[0].pt));
  }

  TEST_CASE("row coverage: random vectors always dispatch") {
    Rng rng(97);
    const std::vector<CubicType> types = {
        CubicType::Nodal,      CubicType::Cuspidal, CubicType::ConicTangent,
        CubicType::ThreeLines, CubicType::ConicChord, CubicType::Triangle,
        CubicType::DoubleLine, CubicType::TripleLine};
    for (auto t : types) {
      for (int i = 0; i < 60; ++i) {
        std::array<Rat, 9> a;
        for (auto& x : a) {
          //跳 zero with decent probability to reach the deep rows
          x = rng.range(0, 2) == 0 ? Rat(0) : rng.rat(4, 2);
        }
        PolyQ f = instance_polynomial(t, a);
        try {
          NormalizingMap nm = normalizing_map(f.degree_part(3));
          REQUIRE(nm.available);
          ReducedForm rf = reduce_coefficients(f, t, nm.map);
          Verdict v = table_classify(rf);
          CHECK(!v.row_label.empty());
        } catch (const NotBTypeSignal&) {
          CHECK((t == CubicType::DoubleLine || t == CubicType::TripleLine));
        } catch (const IncompleteTableError& e) {
          FAIL("IncompleteTable for type " << cubic_type_name(t) << " on "
                                           << f.str({"x0", "x1", "x2"}));
        }
      }
    }
  }

  TEST_CASE("tables dump parses back") {
    CHECK(!tables_data_text().empty());
    CHECK(encoded_tables().size() > 40);
  }
}
