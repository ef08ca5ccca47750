#pragma once

#include "cubinf/field.hpp"
#include "cubinf/germ.hpp"
#include "cubinf/tables.hpp"

namespace cubinf {

/// Homogenization of the reduced polynomial (4 variables, x3 last).
inline PolyQ homogenize3(const PolyQ& g) { return g.homogenized(3); }

/// F - t*x3^3 at a rational parameter value.
inline PolyQ fiber_polynomial(const PolyQ& homog, const Rat& t) {
  PolyQ f = homog;
  f.add_term(Mono({0, 0, 0, 3}), -t);
  return f;
}

template <class K>
struct ChartGerm {
  Poly<K> germ;             // 3-variable chart polynomial
  std::vector<K> point;     // chart coordinates of the point (x3 component last)
};

/// Chart of a fiber polynomial at a point of the plane at infinity: set the
/// first nonzero projective coordinate to 1; the remaining variables keep
/// their order, with x3 last and equal to 0 at the point.
template <class K>
ChartGerm<K> infinity_chart(const Poly<K>& fiber4, const std::array<K, 3>& pt) {
  int ch = -1;
  for (int i = 0; i < 3; ++i)
    if (!pt[i].is_zero()) { ch = i; break; }
  if (ch < 0) throw MathError("infinity_chart: zero point");
  ChartGerm<K> out;
  out.germ = fiber4.set_var_to_one(ch);
  K inv = pt[ch].inv();
  for (int i = 0; i < 3; ++i)
    if (i != ch) out.point.push_back(pt[i] * inv);
  out.point.push_back(K());  // x3 = 0
  return out;
}

/// Germ analysis of the fiber {g = t} at a point at infinity, rational t.
GermAnalysis ade_at_infinity(const PolyQ& homog, const Rat& t, const InfPoint& pt);

/// Same at an algebraic parameter value (the point must be rational).
GermAnalysis ade_at_infinity_ext(const PolyQ& homog, const AlgElem& t, const InfPoint& pt);

}  // namespace cubinf
