#include "cubinf/tables.hpp"

#include <algorithm>
#include <map>

#include "cubinf/infinity.hpp"
#include "cubinf/parser.hpp"

namespace cubinf {

std::string inf_point_str(const InfPoint& p) {
  if (std::holds_alternative<P2Point>(p)) {
    const auto& q = std::get<P2Point>(p);
    return "(" + q.x[0].str() + ":" + q.x[1].str() + ":" + q.x[2].str() + ":0)";
  }
  const auto& q = std::get<P2PointExt>(p);
  return "(" + q.x[0].str() + ":" + q.x[1].str() + ":" + q.x[2].str() + ":0) with " +
         q.field->modulus.str(q.field->gen_name) + " = 0";
}

GermAnalysis ade_at_infinity(const PolyQ& homog, const Rat& t, const InfPoint& pt) {
  PolyQ fiber = fiber_polynomial(homog, t);
  if (std::holds_alternative<P2Point>(pt)) {
    const auto& p = std::get<P2Point>(pt);
    auto chart = infinity_chart<Rat>(fiber, p.x);
    return ade_classify(chart.germ, std::span<const Rat>(chart.point));
  }
  const auto& p = std::get<P2PointExt>(pt);
  PolyE fe = embed(fiber, p.field);
  auto chart = infinity_chart<AlgElem>(fe, p.x);
  return ade_classify(chart.germ, std::span<const AlgElem>(chart.point));
}

GermAnalysis ade_at_infinity_ext(const PolyQ& homog, const AlgElem& t, const InfPoint& pt) {
  if (!std::holds_alternative<P2Point>(pt))
    throw MathError("ade_at_infinity_ext: extension point with extension parameter");
  const auto& p = std::get<P2Point>(pt);
  PolyE fe = embed(homog, t.field());
  fe.add_term(Mono({0, 0, 0, 3}), -t);
  std::array<AlgElem, 3> coords{AlgElem(p.x[0]), AlgElem(p.x[1]), AlgElem(p.x[2])};
  auto chart = infinity_chart<AlgElem>(fe, coords);
  return ade_classify(chart.germ, std::span<const AlgElem>(chart.point));
}

namespace {

const std::vector<std::string>& avars() {
  static const std::vector<std::string> v = {"a0", "a1", "a2", "a3", "a4",
                                             "a5", "a6", "a7", "a8"};
  return v;
}
const std::vector<std::string>& atvars() {
  static const std::vector<std::string> v = {"a0", "a1", "a2", "a3", "a4",
                                             "a5", "a6", "a7", "a8", "t"};
  return v;
}

Rat eval_cond(const std::string& expr, const std::array<Rat, 9>& a) {
  static std::map<std::string, PolyQ> cache;
  auto it = cache.find(expr);
  if (it == cache.end()) it = cache.emplace(expr, parse_poly(expr, avars())).first;
  std::vector<Rat> pt(a.begin(), a.end());
  return it->second.eval(std::span<const Rat>(pt));
}

UPoly eval_t_locus(const std::string& expr, const std::array<Rat, 9>& a) {
  static std::map<std::string, Poly<Rat>> cache;
  auto it = cache.find(expr);
  if (it == cache.end()) it = cache.emplace(expr, parse_poly(expr, atvars())).first;
  const PolyQ& p = it->second;
  UPoly u;
  std::vector<Rat> coeffs;
  for (auto& [m, c] : p.terms()) {
    Rat v = c;
    for (int i = 0; i < 9; ++i) v *= a[i].pow(m.e[i]);
    int td = m.e[9];
    if (static_cast<int>(coeffs.size()) <= td) coeffs.resize(td + 1, Rat(0));
    coeffs[td] += v;
  }
  return UPoly(coeffs);
}

std::array<Rat, 9> extract_coeffs(const PolyQ& g) {
  std::array<Rat, 9> a;
  a[0] = g.coeff(Mono({1, 0, 0}));
  a[1] = g.coeff(Mono({0, 1, 0}));
  a[2] = g.coeff(Mono({0, 0, 1}));
  a[3] = g.coeff(Mono({2, 0, 0}));
  a[4] = g.coeff(Mono({1, 1, 0}));
  a[5] = g.coeff(Mono({1, 0, 1}));
  a[6] = g.coeff(Mono({0, 2, 0}));
  a[7] = g.coeff(Mono({0, 1, 1}));
  a[8] = g.coeff(Mono({0, 0, 2}));
  return a;
}

// designated quadratic monomials to kill by translation, per type
std::vector<Mono> killed_monomials(CubicType t) {
  switch (t) {
    case CubicType::Nodal:
    case CubicType::ConicTangent:
      return {Mono({2, 0, 0}), Mono({1, 1, 0}), Mono({0, 2, 0})};  // a3 a4 a6
    case CubicType::Cuspidal:
      return {Mono({2, 0, 0}), Mono({0, 2, 0}), Mono({0, 1, 1})};  // a3 a6 a7
    case CubicType::ThreeLines:
      return {Mono({2, 0, 0}), Mono({0, 2, 0})};  // a3 a6
    case CubicType::ConicChord:
    case CubicType::Triangle:
      return {Mono({1, 1, 0}), Mono({1, 0, 1}), Mono({0, 1, 1})};  // a4 a5 a7
    case CubicType::DoubleLine:
      return {Mono({1, 1, 0}), Mono({0, 2, 0})};  // a4 a6
    case CubicType::TripleLine:
      return {Mono({0, 2, 0})};  // a6
    default:
      throw MathError("killed_monomials: type has no reduction");
  }
}

// translation d with the designated quadratic coefficients of g(x - d) zero
AffineMap killing_translation(const PolyQ& g, CubicType ct) {
  PolyQ f3 = g.degree_part(3), f2 = g.degree_part(2);
  auto grad3 = f3.gradient();
  auto monos = killed_monomials(ct);
  // solve sum_i d_i * coeff(d_i f3, m) = coeff(f2, m) for each designated m
  MatQ sys(static_cast<int>(monos.size()), 4);
  for (size_t r = 0; r < monos.size(); ++r) {
    for (int i = 0; i < 3; ++i) sys.a[r][i] = grad3[i].coeff(monos[r]);
    sys.a[r][3] = f2.coeff(monos[r]);
  }
  std::vector<int> piv;
  sys.echelonize(&piv);
  std::vector<Rat> d(3, Rat(0));
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == 3) throw InternalError("killing_translation: inconsistent system");
    d[piv[r]] = sys.a[r][3];
  }
  return AffineMap::translation(d);
}

struct Reduction {
  PolyQ g;  // current reduced polynomial, constant stripped
  Rat constant{0};
  AffineMap applied;
  std::vector<std::string> notes;

  void apply(const AffineMap& step) {
    PolyQ full = g;
    full.add_term(Mono(3), constant);
    full = substitute_affine(full, step);
    constant = full.constant_term();
    full.add_term(Mono(3), -constant);
    g = full;
    applied = step.compose(applied);
  }
  std::array<Rat, 9> coeffs() const { return extract_coeffs(g); }
};

void kill_quadratics(Reduction& red, CubicType ct) {
  red.apply(killing_translation(red.g, ct));
  for (auto& m : killed_monomials(ct))
    if (!red.g.coeff(m).is_zero())
      throw InternalError("reduce_coefficients: designated monomial survived");
}

AffineMap shear_step(int target, std::initializer_list<std::pair<int, Rat>> adds) {
  MatQ m = MatQ::identity(3);
  for (auto& [j, c] : adds) m.a[target][j] = c;
  return AffineMap::from_inverse(m, {Rat(0), Rat(0), Rat(0)}, Rat(1));
}

AffineMap swap_vars(int i, int j) {
  MatQ m = MatQ::identity(3);
  std::swap(m.a[i], m.a[j]);
  return AffineMap::from_inverse(m, {Rat(0), Rat(0), Rat(0)}, Rat(1));
}

// boundary-root normalization for the double-line / triple-line reductions
void normalize_boundary_quadratic(Reduction& red, CubicType ct) {
  auto a = red.coeffs();
  if (a[3].is_zero() && a[5].is_zero() && a[8].is_zero())
    throw NotBTypeSignal("f2 vanishes on the singular line at infinity");
  Rat gamma = a[5] * a[5] - a[3] * a[8] * Rat(4);
  if (ct == CubicType::DoubleLine) {
    if (!gamma.is_zero()) {
      if (a[8].is_zero()) {
        // roots (0:0:1) and (-a5:0:a3); carry the second onto (1:0:0)
        if (!a[3].is_zero()) red.apply(shear_step(2, {{0, -a[3] / a[5]}}));
      } else if (auto s = gamma.sqrt_exact()) {
        Rat r = (-a[5] + *s) / (a[8] * Rat(2));
        red.apply(shear_step(2, {{0, r}}));
      } else {
        red.notes.push_back("boundary points form a conjugate pair over Q(sqrt(" +
                            gamma.str() + "))");
      }
    } else {
      if (!a[8].is_zero()) {
        Rat r = -a[5] / (a[8] * Rat(2));
        red.apply(shear_step(2, {{0, r}}));
        auto b = red.coeffs();
        if (!b[7].is_zero()) red.apply(shear_step(2, {{1, -b[7] / (b[8] * Rat(2))}}));
      }
      // a8 = 0 forces a5 = 0 here; the double root sits at (0:0:1), pinned
    }
  } else {  // TripleLine
    if (!gamma.is_zero()) {
      std::optional<std::array<std::array<Rat, 2>, 2>> roots;  // columns (x0, x2)
      if (a[8].is_zero()) {
        roots = {{{Rat(0), Rat(1)}, {a[5], -a[3]}}};
      } else if (auto s = gamma.sqrt_exact()) {
        Rat rp = (-a[5] + *s) / (a[8] * Rat(2)), rm = (-a[5] - *s) / (a[8] * Rat(2));
        roots = {{{Rat(1), rp}, {Rat(1), rm}}};
      }
      if (roots) {
        MatQ m = MatQ::identity(3);
        m.a[0][0] = (*roots)[0][0];
        m.a[2][0] = (*roots)[0][1];
        m.a[0][2] = (*roots)[1][0];
        m.a[2][2] = (*roots)[1][1];
        if (m.det().is_zero()) throw InternalError("triple-line roots not distinct");
        red.apply(AffineMap::from_inverse(m, {Rat(0), Rat(0), Rat(0)}, Rat(1)));
      } else {
        red.notes.push_back("boundary points form a conjugate pair over Q(sqrt(" +
                            gamma.str() + "))");
      }
    } else {
      if (a[8].is_zero() && !a[3].is_zero()) red.apply(swap_vars(0, 2));
      auto b = red.coeffs();
      if (!b[8].is_zero() && !b[5].is_zero())
        red.apply(shear_step(2, {{0, -b[5] / (b[8] * Rat(2))}}));
    }
  }
  kill_quadratics(red, ct);
}

}  // namespace

ReducedForm reduce_coefficients(const PolyQ& f, CubicType ct, const AffineMap& nm) {
  Reduction red{PolyQ(3)};
  red.g = f;
  red.constant = f.constant_term();
  red.g.add_term(Mono(3), -red.constant);
  red.apply(nm);
  PolyQ f3 = red.g.degree_part(3);
  Rat lam = f3.coeff(Mono({1, 1, 1}));
  if (ct != CubicType::General && f3 != cubic_normal_form(ct, lam))
    throw MathError("reduce_coefficients: cubic part is not the type's normal form");
  kill_quadratics(red, ct);
  if (ct == CubicType::DoubleLine || ct == CubicType::TripleLine)
    normalize_boundary_quadratic(red, ct);
  ReducedForm rf;
  rf.f_reduced = red.g;
  rf.a = red.coeffs();
  rf.constant = red.constant;
  rf.applied = red.applied;
  rf.cubic_type = ct;
  rf.notes = red.notes;
  return rf;
}

namespace {

InfPoint rational_point(long x0, long x1, long x2) {
  return P2Point::make(Rat(x0), Rat(x1), Rat(x2));
}

// the two boundary points of the double/triple line cases
std::vector<InfPoint> boundary_points(const std::array<Rat, 9>& a) {
  Rat gamma = a[5] * a[5] - a[3] * a[8] * Rat(4);
  std::vector<InfPoint> pts;
  if (!gamma.is_zero()) {
    if (a[8].is_zero()) {
      // the component-intersection point (0:0:1) carries the deeper types and
      // sits in the second (R) slot
      if (a[3].is_zero()) {
        pts.push_back(rational_point(1, 0, 0));
      } else {
        pts.push_back(P2Point::make(-a[5], Rat(0), a[3]));
      }
      pts.push_back(rational_point(0, 0, 1));
    } else if (auto s = gamma.sqrt_exact()) {
      Rat rp = (-a[5] + *s) / (a[8] * Rat(2)), rm = (-a[5] - *s) / (a[8] * Rat(2));
      pts.push_back(P2Point::make(Rat(1), Rat(0), rp));
      pts.push_back(P2Point::make(Rat(1), Rat(0), rm));
    } else {
      UPoly m({a[3], a[5], a[8]});  // a3 + a5 z + a8 z^2, z = x2/x0
      auto field = std::make_shared<const NumberField>(m.monic(), "s");
      pts.push_back(P2PointExt{field, {AlgElem(Rat(1)), AlgElem(), AlgElem::generator(field)}});
      pts.push_back(P2PointExt{field, {AlgElem(Rat(1)), AlgElem(),
                                       AlgElem(-a[5] / a[8]) - AlgElem::generator(field)}});
    }
  } else {
    if (a[8].is_zero()) {
      pts.push_back(rational_point(0, 0, 1));
    } else {
      // normalized to a3 = a5 = 0
      pts.push_back(rational_point(1, 0, 0));
    }
  }
  return pts;
}

}  // namespace

std::vector<InfPoint> infinity_points(const ReducedForm& rf) {
  const auto& a = rf.a;
  std::vector<InfPoint> pts;
  switch (rf.cubic_type) {
    case CubicType::Nodal:
    case CubicType::Cuspidal:
    case CubicType::ConicTangent:
    case CubicType::ThreeLines:
      if (a[8].is_zero()) pts.push_back(rational_point(0, 0, 1));
      return pts;
    case CubicType::ConicChord:
      if (a[8].is_zero()) pts.push_back(rational_point(0, 0, 1));
      if (a[6].is_zero()) pts.push_back(rational_point(0, 1, 0));
      return pts;
    case CubicType::Triangle:
      if (a[8].is_zero()) pts.push_back(rational_point(0, 0, 1));
      if (a[6].is_zero()) pts.push_back(rational_point(0, 1, 0));
      if (a[3].is_zero()) pts.push_back(rational_point(1, 0, 0));
      return pts;
    case CubicType::DoubleLine:
    case CubicType::TripleLine:
      return boundary_points(a);
    default:
      return pts;  // General: none
  }
}

namespace {

struct TypeArrow {
  LocalType generic;
  std::optional<LocalType> special;  // jump target, possibly NonIsolated
};

TypeArrow parse_type_arrow(const std::string& s) {
  auto arrow = s.find("->");
  if (arrow == std::string::npos) {
    auto t = LocalType::parse(s);
    if (!t) throw MathError("tables: bad type '" + s + "'");
    return {*t, std::nullopt};
  }
  auto g = LocalType::parse(s.substr(0, arrow));
  auto sp = LocalType::parse(s.substr(arrow + 2));
  if (!g || !sp) throw MathError("tables: bad type arrow '" + s + "'");
  return {*g, sp};
}

bool row_matches(const TableRow& row, const std::array<Rat, 9>& a) {
  for (auto& z : row.zero_conds)
    if (!eval_cond(z, a).is_zero()) return false;
  for (auto& nz : row.nonzero_conds)
    if (eval_cond(nz, a).is_zero()) return false;
  return true;
}

// curve Milnor numbers of the normal forms at the table points
long mu_inf_at(const ReducedForm& rf, const InfPoint& pt) {
  PolyQ f3 = rf.f_reduced.degree_part(3);
  CurvePoint cp;
  if (std::holds_alternative<P2Point>(pt)) {
    cp.coords = std::get<P2Point>(pt);
  } else {
    cp.coords = std::get<P2PointExt>(pt);
  }
  return curve_milnor_at(f3, cp);
}

// the table slot points for the F-type tables (A0 slots included)
std::vector<InfPoint> slot_points(CubicType ct) {
  switch (ct) {
    case CubicType::Nodal:
    case CubicType::Cuspidal:
    case CubicType::ConicTangent:
    case CubicType::ThreeLines:
      return {rational_point(0, 0, 1)};
    case CubicType::ConicChord:
      return {rational_point(0, 0, 1), rational_point(0, 1, 0)};
    case CubicType::Triangle:
      return {rational_point(0, 0, 1), rational_point(0, 1, 0), rational_point(1, 0, 0)};
    default:
      throw InternalError("slot_points: boundary tables use explicit points");
  }
}

Verdict build_verdict_from_row(const ReducedForm& rf, const TableRow& row,
                               const std::vector<InfPoint>& slots, ClassTag cls) {
  Verdict v;
  v.cls = cls;
  v.cubic_type = rf.cubic_type;
  v.table_id = row.table_id;
  v.row_label = row.label;
  v.mu = row.mu;
  v.b2 = row.b2;
  if (!row.note.empty()) v.findings.push_back(row.note);
  std::optional<UPoly> locus;
  if (!row.t_locus.empty()) {
    UPoly u = eval_t_locus(row.t_locus, rf.a);
    if (u.deg() >= 1) locus = squarefree_part(u).monic();
  }
  for (size_t i = 0; i < row.point_types.size(); ++i) {
    if (row.point_types[i] == "-") continue;
    TypeArrow arrow = parse_type_arrow(row.point_types[i]);
    PointVerdict pv;
    if (i >= slots.size()) throw InternalError("tables: more typed slots than points");
    pv.pt = slots[i];
    pv.generic = arrow.generic;
    if (cls == ClassTag::F) pv.mu_inf = mu_inf_at(rf, pv.pt);
    int idx = static_cast<int>(v.points.size());
    v.points.push_back(pv);
    if (arrow.special) {
      if (!locus) throw InternalError("tables: jump row without a t locus");
      auto fac = factor_squarefree(*locus);
      for (auto& f : fac.factors) {
        JumpEvent ev;
        ev.point_index = idx;
        ev.t_locus = f;
        ev.generic = arrow.generic;
        ev.special = *arrow.special;
        if (arrow.special->is_isolated()) {
          ev.jump_per_root = arrow.special->milnor() - arrow.generic.milnor();
          v.lambda_total += ev.jump_per_root * f.deg();
        } else {
          ev.jump_per_root = 0;
          v.non_isolated = true;
        }
        v.events.push_back(ev);
      }
    }
    if (!arrow.generic.is_isolated()) v.non_isolated = true;
  }
  if (row.lambda_star) v.non_isolated = true;
  if (row.lambda && *row.lambda != v.lambda_total && !v.non_isolated)
    v.findings.push_back("table lambda " + std::to_string(*row.lambda) +
                         " differs from the jump sum " + std::to_string(v.lambda_total));
  return v;
}

// generic fiber types through the germ oracle, used for combinations the
// tables do not list
Verdict oracle_path_verdict(const ReducedForm& rf, const std::vector<InfPoint>& slots) {
  Verdict v;
  v.cls = ClassTag::F;
  v.cubic_type = rf.cubic_type;
  v.table_id = rf.cubic_type == CubicType::ConicChord ? 5 : 6;
  v.row_label = "untabulated";
  v.findings.push_back("row not tabulated; types from the local oracle, b2 from the boundary formula");
  PolyQ homog = homogenize3(rf.f_reduced);
  const Rat samples[3] = {Rat(5, 7), Rat(-8, 3), Rat(13, 11)};
  long sum_eq1 = 0;
  for (auto& pt : slots) {
    GermAnalysis g0 = ade_at_infinity(homog, samples[0], pt);
    for (int k = 1; k < 3; ++k) {
      GermAnalysis gk = ade_at_infinity(homog, samples[k], pt);
      if (!(gk.recognized == g0.recognized))
        throw InternalError("oracle path: generic type not stable across samples");
    }
    PointVerdict pv;
    pv.pt = pt;
    pv.generic = g0.recognized;
    pv.mu_inf = mu_inf_at(rf, pt);
    sum_eq1 += pv.generic.milnor() + pv.mu_inf;
    v.points.push_back(pv);
  }
  // all jumps of these families happen at t = 0
  for (size_t i = 0; i < slots.size(); ++i) {
    GermAnalysis gs = ade_at_infinity(homog, Rat(0), v.points[i].pt);
    if (gs.recognized == v.points[i].generic) continue;
    JumpEvent ev;
    ev.point_index = static_cast<int>(i);
    ev.t_locus = UPoly({Rat(0), Rat(1)});
    ev.generic = v.points[i].generic;
    ev.special = gs.recognized;
    if (gs.recognized.is_isolated()) {
      ev.jump_per_root = gs.recognized.milnor() - v.points[i].generic.milnor();
      v.lambda_total += ev.jump_per_root;
    } else {
      ev.jump_per_root = 0;
      v.non_isolated = true;
    }
    v.events.push_back(ev);
  }
  if (!v.non_isolated) {
    long b2 = 8 - sum_eq1;
    if (b2 < 0) throw InternalError("oracle path: negative b2");
    v.b2 = b2;
    v.mu = b2 - v.lambda_total;
  }
  return v;
}

std::vector<const TableRow*> rows_of_table(int id) {
  std::vector<const TableRow*> out;
  for (auto& r : encoded_tables())
    if (r.table_id == id) out.push_back(&r);
  return out;
}

// re-derive a reduced form after composing a coordinate permutation
ReducedForm permuted(const ReducedForm& rf, const AffineMap& step) {
  ReducedForm out = rf;
  PolyQ g = substitute_affine(rf.f_reduced, step);
  out.f_reduced = g;
  out.a = extract_coeffs(g);
  out.applied = step.compose(rf.applied);
  return out;
}

Verdict classify_single_point_table(const ReducedForm& rf0, int table_id) {
  ReducedForm rf = rf0;
  if (table_id == 1) {
    auto& a = rf.a;
    Rat c0 = a[0] + a[7] * a[7] * Rat(3), c1 = a[1] + a[5] * a[5] * Rat(3);
    if (c1.is_zero() && !c0.is_zero()) rf = permuted(rf, swap_vars(0, 1));
  } else if (table_id == 4) {
    if (rf.a[5].is_zero() && !rf.a[7].is_zero()) rf = permuted(rf, swap_vars(0, 1));
  }
  for (auto* row : rows_of_table(table_id))
    if (row_matches(*row, rf.a))
      return build_verdict_from_row(rf, *row, slot_points(rf.cubic_type), ClassTag::F);
  throw IncompleteTableError("no row matched in table " + std::to_string(table_id), rf.a);
}

Verdict classify_conic_chord(const ReducedForm& rf0) {
  ReducedForm rf = rf0;
  auto deep = [](const std::array<Rat, 9>& a) {
    // returns (Q deep, R deep): Q present iff a8 = 0, deep iff also a2 = 0
    return std::make_pair(a[8].is_zero() && a[2].is_zero(), a[6].is_zero() && a[1].is_zero());
  };
  bool swap = false;
  if (!rf.a[8].is_zero() && rf.a[6].is_zero()) {
    swap = true;  // bring the singular point to Q
  } else {
    auto [qd, rd] = deep(rf.a);
    if (!qd && rd) swap = true;
  }
  if (swap) rf = permuted(rf, swap_vars(1, 2));
  for (auto* row : rows_of_table(5))
    if (row_matches(*row, rf.a))
      return build_verdict_from_row(rf, *row, slot_points(CubicType::ConicChord), ClassTag::F);
  return oracle_path_verdict(rf, slot_points(CubicType::ConicChord));
}

Verdict classify_triangle(const ReducedForm& rf0) {
  // permutations of (x0, x1, x2), identity first
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto* row : rows_of_table(6)) {
    for (auto& p : perms) {
      MatQ m(3, 3);
      // new variable i reads old variable p[i]
      for (int i = 0; i < 3; ++i) m.a[p[i]][i] = Rat(1);
      AffineMap step = AffineMap::from_inverse(m, {Rat(0), Rat(0), Rat(0)}, Rat(1));
      ReducedForm rf = permuted(rf0, step);
      if (row_matches(*row, rf.a))
        return build_verdict_from_row(rf, *row, slot_points(CubicType::Triangle), ClassTag::F);
    }
  }
  return oracle_path_verdict(rf0, slot_points(CubicType::Triangle));
}

Verdict classify_boundary_table(const ReducedForm& rf, int table_id) {
  auto pts = boundary_points(rf.a);
  for (auto* row : rows_of_table(table_id)) {
    if (!row_matches(*row, rf.a)) continue;
    // slot layout: two-point rows list (Q, R) in the order boundary_points
    // returns; single-point rows use the lone point
    std::vector<InfPoint> slots = pts;
    if (row->point_types.size() == 2 && slots.size() == 1)
      continue;  // two-point row cannot match a double root
    if (row->point_types.size() == 1 && slots.size() == 2)
      continue;
    Verdict v = build_verdict_from_row(rf, *row, slots, ClassTag::BminusF);
    for (auto& n : rf.notes) v.findings.push_back(n);
    return v;
  }
  throw IncompleteTableError("no row matched in table " + std::to_string(table_id), rf.a);
}

}  // namespace

Verdict table_classify(const ReducedForm& rf) {
  switch (rf.cubic_type) {
    case CubicType::Nodal: return classify_single_point_table(rf, 1);
    case CubicType::Cuspidal: return classify_single_point_table(rf, 2);
    case CubicType::ConicTangent: return classify_single_point_table(rf, 3);
    case CubicType::ThreeLines: return classify_single_point_table(rf, 4);
    case CubicType::ConicChord: return classify_conic_chord(rf);
    case CubicType::Triangle: return classify_triangle(rf);
    case CubicType::DoubleLine: return classify_boundary_table(rf, 7);
    case CubicType::TripleLine: return classify_boundary_table(rf, 8);
    default:
      throw MathError("table_classify: general type has no table");
  }
}

}  // namespace cubinf
