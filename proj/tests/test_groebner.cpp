#include <doctest.h>

#include <functional>
#include <map>

#include "cubinf/groebner.hpp"
#include "cubinf/parser.hpp"
#include "test_util.hpp"

using namespace cubinf;
using testutil::Rng;

namespace {

PolyQ pv(const std::string& s, const std::vector<std::string>& vars) {
  return parse_poly(s, vars);
}

// independent check of the Buchberger criterion: every S-polynomial of the
// basis reduces to zero by plain multivariate division
bool buchberger_criterion(const std::vector<PolyQ>& basis, const MonomialOrder& ord) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      auto li = basis[i].leading_term(ord), lj = basis[j].leading_term(ord);
      Mono l = Mono::lcm(li->first, lj->first);
      PolyQ s = PolyQ::monomial(l / li->first, lj->second) * basis[i] -
                PolyQ::monomial(l / lj->first, li->second) * basis[j];
      if (!normal_form(s, std::span<const PolyQ>(basis), ord).is_zero()) return false;
    }
  return true;
}

// brute-force quotient dimension: rank of the multiplication-truncated
// monomial matrix, for a degree bound big enough to stabilize
long brute_force_quotient_dim(const std::vector<PolyQ>& gens, int nvars, int degree_cap) {
  std::vector<Mono> all;
  {
    Mono m(nvars);
    std::function<void(int, int)> walk = [&](int i, int left) {
      if (i == nvars) {
        all.push_back(m);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        m.e[i] = e;
        walk(i + 1, left - e);
        m.e[i] = 0;
      }
    };
    walk(0, degree_cap);
  }
  std::map<Mono, int> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
  std::vector<std::vector<Rat>> rows;
  for (auto& g : gens)
    for (auto& shift : all) {
      if (shift.deg() + g.degree() > degree_cap) continue;
      std::vector<Rat> row(all.size(), Rat(0));
      for (auto& [m, c] : g.terms()) row[index[m * shift]] = c;
      rows.push_back(std::move(row));
    }
  MatQ m(static_cast<int>(rows.size()), static_cast<int>(all.size()));
  m.a = rows;
  int rank = m.echelonize();
  return static_cast<long>(all.size()) - rank;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("already reduced basis") {
    std::vector<std::string> v{"x", "y"};
    std::vector<PolyQ> gens{pv("x", v), pv("y", v)};
    auto gb = groebner(std::span<const PolyQ>(gens), MonomialOrder::grevlex());
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == pv("x", v));
    CHECK(gb[1] == pv("y", v));
  }

  TEST_CASE("monomial ideal with scaling removed") {
    std::vector<std::string> v{"x", "y", "z"};
    std::vector<PolyQ> gens{pv("3*x^2", v), pv("3*y^2", v), pv("3*z^2", v)};
    auto gb = groebner(std::span<const PolyQ>(gens), MonomialOrder::grevlex());
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == pv("x^2", v));
  }

  TEST_CASE("S-polynomials of the returned basis reduce to zero") {
    std::vector<std::string> v{"x", "y"};
    std::vector<PolyQ> gens{pv("x^2 - y", v), pv("y^2", v)};
    MonomialOrder ord = MonomialOrder::grevlex();
    auto gb = groebner(std::span<const PolyQ>(gens), ord);
    CHECK(buchberger_criterion(gb, ord));
    // and on a handful of random ideals
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
      std::vector<PolyQ> g{rng.poly(3, 2, 3), rng.poly(3, 2, 3), rng.poly(3, 3, 3)};
      auto basis = groebner(std::span<const PolyQ>(g), ord);
      CHECK(buchberger_criterion(basis, ord));
    }
  }

  TEST_CASE("quotient dimensions") {
    std::vector<std::string> v{"x", "y", "z"};
    std::vector<PolyQ> g1{pv("x", v), pv("y", v), pv("z", v)};
    CHECK(*quotient_dim(std::span<const PolyQ>(g1)) == 1);
    std::vector<PolyQ> g2{pv("x^2", v), pv("y^2", v), pv("z^2", v)};
    CHECK(*quotient_dim(std::span<const PolyQ>(g2)) == 8);
    // Jacobian ideal of x^3+y^3+z^3-3x-3y-3z: 8 Morse points
    std::vector<PolyQ> g3{pv("3*x^2 - 3", v), pv("3*y^2 - 3", v), pv("3*z^2 - 3", v)};
    CHECK(*quotient_dim(std::span<const PolyQ>(g3)) == 8);
    // unbounded staircase
    std::vector<PolyQ> g4{pv("x*y", v), pv("z", v)};
    CHECK(!quotient_dim(std::span<const PolyQ>(g4)).has_value());
  }

  TEST_CASE("quotient dimension agrees with brute-force linear algebra") {
    struct Case {
      std::vector<std::string> gens;
      int nvars;
      int cap;
    };
    std::vector<std::string> v2{"x", "y"}, v3{"x", "y", "z"};
    std::vector<Case> cases = {
        {{"x^2 - y", "y^2"}, 2, 8},
        {{"x^2 + y^2 - 1", "x*y - 1"}, 2, 8},
        {{"x^2", "x*y", "y^3"}, 2, 8},
        {{"x^2 - 3", "y^2 - 5", "z^2 - 7"}, 3, 7},
        {{"x^3 - y", "y^2 - z", "z^2 + x - 2"}, 3, 9},
    };
    for (auto& c : cases) {
      auto& vars = c.nvars == 2 ? v2 : v3;
      std::vector<PolyQ> gens;
      for (auto& s : c.gens) gens.push_back(pv(s, vars));
      auto qd = quotient_dim(std::span<const PolyQ>(gens));
      REQUIRE(qd.has_value());
      CHECK(*qd <= 12);
      CHECK(*qd == brute_force_quotient_dim(gens, c.nvars, c.cap));
    }
  }

  TEST_CASE("elimination") {
    // <x - t, y - t^2>: eliminating x keeps the relation between y and t
    std::vector<std::string> v{"x", "y", "t"};
    std::vector<PolyQ> gens{pv("x - t", v), pv("y - t^2", v)};
    auto kept = eliminate(std::span<const PolyQ>(gens), 1);
    bool found = false;
    for (auto& k : kept)
      if (k == pv("y - t^2", v) || k == pv("t^2 - y", v)) found = true;
    CHECK(found);
    // critical values of x^3 - 3x + y^2 + z^2: w^2 - 4
    std::vector<std::string> w{"x", "y", "z", "w"};
    std::vector<PolyQ> cv{pv("3*x^2 - 3", w), pv("2*y", w), pv("2*z", w),
                          pv("w - x^3 + 3*x - y^2 - z^2", w)};
    auto ev = eliminate(std::span<const PolyQ>(cv), 3);
    REQUIRE(ev.size() == 1);
    CHECK(ev[0] == pv("w^2 - 4", w));
    // zero ideal stays zero
    std::vector<PolyQ> zero;
    CHECK(eliminate(std::span<const PolyQ>(zero), 1).empty());
  }

  TEST_CASE("deterministic output") {
    Rng rng(41);
    for (int i = 0; i < 5; ++i) {
      std::vector<PolyQ> gens{rng.poly(3, 2, 4), rng.poly(3, 2, 4)};
      auto a = groebner(std::span<const PolyQ>(gens), MonomialOrder::grevlex());
      auto b = groebner(std::span<const PolyQ>(gens), MonomialOrder::grevlex());
      CHECK(a == b);
    }
  }
}
