#include "cubinf/invariants.hpp"

#include <algorithm>

#include "cubinf/groebner.hpp"

namespace cubinf {

long chi_smooth(int n, int d) {
  if (n < 1 || d < 1) throw MathError("chi_smooth: need n, d >= 1");
  // n + 1 - (1/d) * (1 + (-1)^n (d-1)^(n+1))
  Rat dm1(d - 1);
  Rat inner = Rat(1) + dm1.pow(n + 1) * Rat(n % 2 == 0 ? 1 : -1);
  Rat chi = Rat(n + 1) - inner / Rat(d);
  if (!chi.is_integer()) throw InconsistencyError("chi_smooth: non-integer value");
  return chi.num().get_si();
}

BettiPair b2_from_boundary(long lambda, const std::vector<std::pair<long, long>>& mu_pairs) {
  long sum = 0;
  for (auto& [g, i] : mu_pairs) sum += g + i;
  long b2 = 8 - sum;
  if (b2 < 0 || b2 - lambda < 0)
    throw InconsistencyError("b2_from_boundary: negative Betti data");
  return {b2, b2 - lambda};
}

long b2_from_boundary_nonreduced(long mu_gen_sum, int chi_inf) {
  long b2 = (chi_smooth(3, 3) - 1) - mu_gen_sum - chi_inf;
  if (b2 < 0) throw InconsistencyError("b2_from_boundary_nonreduced: negative b2");
  return b2;
}

long betti_defect(long mu_boundary_sum, int delta_chi_inf) {
  // Delta_2 = sum mu_p + (-1)^3 * delta_chi
  return mu_boundary_sum - delta_chi_inf;
}

std::optional<long> affine_milnor_total(const PolyQ& f) {
  std::vector<PolyQ> jac;
  for (auto& g : f.gradient())
    if (!g.is_zero()) jac.push_back(g);
  if (jac.empty()) return std::nullopt;  // constant polynomial: degenerate input
  auto qd = quotient_dim(std::span<const PolyQ>(jac));
  return qd;
}

std::optional<UPoly> critical_values(const PolyQ& f) {
  if (f.nvars() != 3) throw ContextError("critical_values: need 3 variables");
  // ideal <grad f, w - f> in (x0, x1, x2, w), eliminate the x block
  std::vector<PolyQ> gens;
  for (auto& g : f.gradient()) {
    PolyQ lift(4);
    for (auto& [m, c] : g.terms()) lift.add_term(Mono({m.e[0], m.e[1], m.e[2], 0}), c);
    if (!lift.is_zero()) gens.push_back(lift);
  }
  PolyQ wf = PolyQ::var(4, 3);
  for (auto& [m, c] : f.terms()) wf.add_term(Mono({m.e[0], m.e[1], m.e[2], 0}), -c);
  gens.push_back(wf);
  auto kept = eliminate(std::span<const PolyQ>(gens), 3);
  UPoly g;
  for (auto& k : kept) {
    std::vector<Rat> c(k.degree_in(3) + 1, Rat(0));
    for (auto& [m, co] : k.terms()) {
      if (m.e[0] || m.e[1] || m.e[2]) throw InternalError("critical_values: elimination leaked");
      c[m.e[3]] = co;
    }
    UPoly u(c);
    g = g.is_zero() ? u : gcd_monic(g, u);
  }
  if (g.is_zero()) throw InternalError("critical_values: zero elimination ideal");
  if (g.deg() == 0) return std::nullopt;  // unit ideal: empty critical set
  return squarefree_part(g).monic();
}

namespace {

// pull a reduced-parameter locus p(t) back to the original parameter w:
// t = L*w - k  (fiber f = w corresponds to reduced fiber g = L*w - k)
UPoly pull_back_locus(const UPoly& p, const Rat& codomain_scale, const Rat& constant) {
  UPoly lin({-constant, codomain_scale});
  UPoly acc = UPoly::constant(p.lead());
  for (int i = p.deg() - 1; i >= 0; --i) acc = acc * lin + UPoly::constant(p[i]);
  return squarefree_part(acc).monic();
}

bool has_special(const Verdict& v, const LocalType& t) {
  for (auto& e : v.events)
    if (e.special == t) return true;
  return false;
}
bool has_generic(const Verdict& v, const LocalType& t) {
  for (auto& p : v.points)
    if (p.generic == t) return true;
  return false;
}

}  // namespace

GlobalInvariants global_invariants(const PolyQ& f_original, const ReducedForm& rf,
                                   const Verdict& v) {
  GlobalInvariants out;
  out.mu_affine = affine_milnor_total(f_original);
  out.critical_values = critical_values(f_original);
  for (auto& e : v.events) {
    UPoly orig = pull_back_locus(e.t_locus, rf.applied.codomain_scale(), rf.constant);
    auto fac = factor_squarefree(orig);
    for (auto& f : fac.factors) out.atyp_infinity.push_back(f);
  }
  std::sort(out.atyp_infinity.begin(), out.atyp_infinity.end(),
            [](const UPoly& a, const UPoly& b) {
              if (a.deg() != b.deg()) return a.deg() < b.deg();
              for (int i = a.deg(); i >= 0; --i)
                if (!(a[i] == b[i])) return a[i] < b[i];
              return false;
            });
  out.atyp_infinity.erase(std::unique(out.atyp_infinity.begin(), out.atyp_infinity.end(),
                                      [](const UPoly& a, const UPoly& b) { return a == b; }),
                          out.atyp_infinity.end());

  bool no_affine_sing = out.mu_affine.has_value() && *out.mu_affine == 0 &&
                        !out.critical_values.has_value();
  bool atyp_nonempty = !out.atyp_infinity.empty() || out.critical_values.has_value();

  if (no_affine_sing && atyp_nonempty) {
    out.broughton = true;
    using LT = LocalType;
    if (v.cubic_type == CubicType::Cuspidal &&
        (has_special(v, LT::D(5)) || has_special(v, LT::E(6)))) {
      out.broughton_case = has_special(v, LT::E(6))
                               ? "cuspidal boundary, one special fiber of type E6"
                               : "cuspidal boundary, two special fibers of type D5";
    } else if (v.cubic_type == CubicType::ConicTangent && has_special(v, LT::D(5))) {
      out.broughton_case = "conic-plus-tangent boundary, special fiber of type D5";
    } else if (v.cubic_type == CubicType::ConicChord && has_special(v, LT::A(5)) &&
               has_generic(v, LT::A(1))) {
      out.broughton_case = "conic-plus-chord boundary, special combination A1 A5";
    } else if (v.cubic_type == CubicType::Triangle && has_special(v, LT::A(3))) {
      int a1 = 0;
      for (auto& p : v.points)
        if (p.generic == LT::A(1)) ++a1;
      if (a1 >= 2) {
        out.broughton_case = "triangle boundary, special combination A1 A1 A3";
      } else {
        out.broughton_case = "unlisted combination";
        out.findings.push_back("Broughton instance outside the catalogued cases");
      }
    } else if (v.cubic_type == CubicType::DoubleLine && has_special(v, LT::D(5))) {
      out.broughton_case = "double-line boundary, special fiber of type D5";
    } else {
      out.broughton_case = "unlisted combination";
      out.findings.push_back("Broughton instance outside the catalogued cases");
    }
  }

  bool lambda_zero = v.lambda_total == 0 && v.events.empty() && !v.non_isolated;
  if (lambda_zero && no_affine_sing) {
    out.global_fibration = true;
    using LT = LocalType;
    if (v.cubic_type == CubicType::ConicTangent && has_generic(v, LT::D(5))) {
      out.fibration_case = "conic-plus-tangent boundary of type D5";
    } else if (v.cubic_type == CubicType::ThreeLines &&
               (has_generic(v, LT::D(4)) || has_generic(v, LT::A(4)))) {
      out.fibration_case = "three-lines boundary of type D4 or A4";
    } else if (v.cubic_type == CubicType::DoubleLine &&
               (has_generic(v, LT::A(4)) || has_generic(v, LT::D(5)))) {
      out.fibration_case = "double-line boundary of type A4 or D5";
    } else {
      out.fibration_case = "unlisted combination";
      out.findings.push_back("global fibration outside the catalogued cases");
    }
  }
  return out;
}

void check_verdict_consistency(const ReducedForm& rf, const Verdict& v) {
  if (v.non_isolated || !v.mu || !v.b2) return;
  if (v.cls == ClassTag::F) {
    std::vector<std::pair<long, long>> pairs;
    for (auto& p : v.points) pairs.push_back({p.generic.milnor(), p.mu_inf});
    BettiPair bp = b2_from_boundary(v.lambda_total, pairs);
    if (bp.b2 != *v.b2 || bp.mu != *v.mu)
      throw InconsistencyError("verdict inconsistent with the isolated-boundary formula (row " +
                               v.row_label + ")");
    if (*v.b2 != v.lambda_total + *v.mu)
      throw InconsistencyError("b2 != lambda + mu (row " + v.row_label + ")");
  } else if (v.cls == ClassTag::BminusF) {
    long mu_gen = 0;
    for (auto& p : v.points) mu_gen += p.generic.milnor();
    long b2 = b2_from_boundary_nonreduced(mu_gen, chi_infinity(rf.cubic_type));
    if (b2 != *v.b2)
      throw InconsistencyError("verdict inconsistent with the non-reduced boundary formula (row " +
                               v.row_label + ")");
    int delta_chi = chi_smooth(2, 3) - chi_infinity(rf.cubic_type);
    if (betti_defect(mu_gen, delta_chi) != 8 - *v.b2)
      throw InconsistencyError("Betti defect cross-check failed (row " + v.row_label + ")");
    if (*v.b2 != v.lambda_total + *v.mu)
      throw InconsistencyError("b2 != lambda + mu (row " + v.row_label + ")");
  }
}

}  // namespace cubinf
