#include "cubinf/cubic_curve.hpp"

#include <algorithm>
#include <cassert>

#include "cubinf/groebner.hpp"

namespace cubinf {

const char* cubic_type_name(CubicType t) {
  switch (t) {
    case CubicType::General: return "general";
    case CubicType::Nodal: return "nodal";
    case CubicType::Cuspidal: return "cuspidal";
    case CubicType::ConicTangent: return "conic-plus-tangent";
    case CubicType::ConicChord: return "conic-plus-chord";
    case CubicType::ThreeLines: return "three-concurrent-lines";
    case CubicType::Triangle: return "triangle";
    case CubicType::DoubleLine: return "double-line-plus-line";
    case CubicType::TripleLine: return "triple-line";
  }
  return "?";
}

int chi_infinity(CubicType t) {
  switch (t) {
    case CubicType::General: return 0;
    case CubicType::Nodal: return 1;
    case CubicType::Cuspidal: return 2;
    case CubicType::ConicTangent: return 3;
    case CubicType::ConicChord: return 2;
    case CubicType::ThreeLines: return 4;
    case CubicType::Triangle: return 3;
    case CubicType::DoubleLine: return 3;
    case CubicType::TripleLine: return 2;
  }
  throw MathError("chi_infinity: bad type");
}

namespace {

PolyQ mono3(int a, int b, int c, const Rat& k = Rat(1)) {
  return PolyQ::monomial(Mono({a, b, c}), k);
}

}  // namespace

PolyQ cubic_normal_form(CubicType t, const Rat& lambda) {
  switch (t) {
    case CubicType::General:
      return mono3(3, 0, 0) + mono3(0, 3, 0) + mono3(0, 0, 3) + mono3(1, 1, 1, lambda);
    case CubicType::Nodal:
      return mono3(3, 0, 0) + mono3(0, 3, 0) + mono3(1, 1, 1);
    case CubicType::Cuspidal:
      return mono3(3, 0, 0, Rat(-1)) + mono3(0, 2, 1);
    case CubicType::ConicTangent:  // (x0^2 + x1*x2) * x1
      return mono3(2, 1, 0) + mono3(0, 2, 1);
    case CubicType::ConicChord:  // (x0^2 + x1*x2) * x0
      return mono3(3, 0, 0) + mono3(1, 1, 1);
    case CubicType::ThreeLines:
      return mono3(3, 0, 0) + mono3(0, 3, 0);
    case CubicType::Triangle:
      return mono3(1, 1, 1);
    case CubicType::DoubleLine:
      return mono3(1, 2, 0);
    case CubicType::TripleLine:
      return mono3(0, 3, 0);
  }
  throw MathError("cubic_normal_form: bad type");
}

P2Point P2Point::make(const Rat& a, const Rat& b, const Rat& c) {
  std::array<Rat, 3> v{a, b, c};
  mpz_class g = 0, l = 1;
  for (auto& x : v) {
    if (x.is_zero()) continue;
    g = gcd_z(g, x.num());
    l = lcm_z(l, x.den());
  }
  if (g == 0) throw MathError("P2Point: zero vector");
  Rat s(l, g);
  for (auto& x : v)
    if (!x.is_zero()) { s = (x * s).sign() < 0 ? -s : s; break; }
  for (auto& x : v) x *= s;
  return P2Point{v};
}

int P2Point::chart() const {
  for (int i = 0; i < 3; ++i)
    if (!x[i].is_zero()) return i;
  throw MathError("P2Point: zero vector");
}

std::string P2Point::str() const {
  return "(" + x[0].str() + ":" + x[1].str() + ":" + x[2].str() + ")";
}

int P2PointExt::chart() const {
  for (int i = 0; i < 3; ++i)
    if (!x[i].is_zero()) return i;
  throw MathError("P2PointExt: zero vector");
}

std::string P2PointExt::str() const {
  return "(" + x[0].str() + ":" + x[1].str() + ":" + x[2].str() + ")  where  " +
         field->gen_name + "^2 terms satisfy " + field->modulus.str(field->gen_name) + " = 0";
}

std::optional<PolyQ> divide_by_linear(const PolyQ& f, const PolyQ& l) {
  if (l.degree() != 1) throw MathError("divide_by_linear: divisor must be linear");
  int j = -1;
  for (int i = 0; i < l.nvars(); ++i)
    if (l.degree_in(i) == 1) { j = i; break; }
  Mono xj(l.nvars());
  xj.e[j] = 1;
  Rat lj = l.coeff(xj);
  PolyQ q(f.nvars()), r = f;
  while (r.degree_in(j) > 0) {
    // peel the term with the highest x_j exponent (canonical scan)
    Mono best;
    bool found = false;
    for (auto& [m, c] : r.terms()) {
      if (m.e[j] == 0) continue;
      if (!found || m.e[j] > best.e[j] || (m.e[j] == best.e[j] && m < best)) {
        best = m;
        found = true;
      }
    }
    Mono shift = best;
    shift.e[j] -= 1;
    PolyQ piece = PolyQ::monomial(shift, r.coeff(best) / lj);
    q += piece;
    r -= piece * l;
  }
  if (!r.is_zero()) return std::nullopt;
  return q;
}

namespace {

// Split a binary quadratic a*u^2 + b*u*v + c*v^2 into rational linear factors.
std::optional<std::pair<PolyQ, PolyQ>> split_binary_quadratic(const PolyQ& q) {
  Rat a = q.coeff(Mono({2, 0})), b = q.coeff(Mono({1, 1})), c = q.coeff(Mono({0, 2}));
  auto lin = [](const Rat& u, const Rat& v) {
    PolyQ p(2);
    p.add_term(Mono({1, 0}), u);
    p.add_term(Mono({0, 1}), v);
    return p;
  };
  if (a.is_zero() && c.is_zero()) {
    if (b.is_zero()) return std::nullopt;
    return std::make_pair(lin(Rat(1), Rat(0)) * b, lin(Rat(0), Rat(1)));
  }
  if (a.is_zero()) {  // v * (b u + c v)
    return std::make_pair(lin(Rat(0), Rat(1)), lin(b, c));
  }
  Rat disc = b * b - a * c * Rat(4);
  auto s = disc.sqrt_exact();
  if (!s) return std::nullopt;
  // a (u - z+ v)(u - z- v), z = (-b +- s)/(2a)
  Rat zp = (-b + *s) / (a * Rat(2)), zm = (-b - *s) / (a * Rat(2));
  return std::make_pair(lin(Rat(1), -zp) * a, lin(Rat(1), -zm));
}

}  // namespace

std::optional<std::pair<PolyQ, PolyQ>> split_rational_conic(const PolyQ& q) {
  if (q.is_zero() || q.degree() != 2 || !q.is_homogeneous()) return std::nullopt;
  const int n = q.nvars();
  auto lin = [&](const std::vector<Rat>& c) {
    PolyQ p(n);
    for (int i = 0; i < n; ++i) {
      Mono m(n);
      m.e[i] = 1;
      p.add_term(m, c[i]);
    }
    return p;
  };
  int j = -1;
  for (int i = 0; i < n; ++i)
    if (q.degree_in(i) == 2) { j = i; break; }
  if (j < 0) {
    // no square term: count cross terms
    std::vector<std::pair<Mono, Rat>> cross;
    for (auto& [m, c] : q.terms()) cross.push_back({m, c});
    if (cross.size() == 1) {
      int a = -1, b = -1;
      for (int i = 0; i < n; ++i)
        if (cross[0].first.e[i] == 1) (a < 0 ? a : b) = i;
      std::vector<Rat> l1(n, Rat(0)), l2(n, Rat(0));
      l1[a] = cross[0].second;
      l2[b] = Rat(1);
      return std::make_pair(lin(l1), lin(l2));
    }
    // q = x_k * (rest) iff some variable appears in every term
    for (int k = 0; k < n; ++k) {
      bool in_all = true;
      for (auto& [m, c] : q.terms())
        if (m.e[k] == 0) { in_all = false; break; }
      if (!in_all) continue;
      std::vector<Rat> lk(n, Rat(0));
      lk[k] = Rat(1);
      PolyQ xk = lin(lk);
      auto rest = divide_by_linear(q, xk);
      if (rest && rest->degree() == 1) return std::make_pair(xk, *rest);
    }
    return std::nullopt;
  }
  // univariate in x_j: a x_j^2 + B x_j + C with disc B^2 - 4 a C a square of a
  // linear form
  Rat a = coeff_of_power(q, j, 2).constant_term();
  PolyQ B = coeff_of_power(q, j, 1), C = coeff_of_power(q, j, 0);
  PolyQ D = B * B - C * PolyQ(n, a * Rat(4));
  // D is a quadratic form in the variables other than j; test for a perfect
  // square of a rational linear form S.
  PolyQ S(n);
  if (!D.is_zero()) {
    int u = -1;
    for (int i = 0; i < n; ++i)
      if (i != j && D.degree_in(i) > 0) { u = i; break; }
    if (u < 0) return std::nullopt;
    Rat du = coeff_of_power(D, u, 2).constant_term();
    auto sq = du.sqrt_exact();
    if (!sq || sq->is_zero()) return std::nullopt;
    // S = sq * x_u + (coeff of x_u in D)/(2 sq)
    PolyQ rest = coeff_of_power(D, u, 1);
    Mono xu(n);
    xu.e[u] = 1;
    S = PolyQ::monomial(xu, *sq) + rest * (Rat(1) / (*sq * Rat(2)));
    if (!(S * S == D)) return std::nullopt;
  }
  // q = (2a x_j + B + S)/2 * (2a x_j + B - S)/(2a)
  Mono xj(n);
  xj.e[j] = 1;
  PolyQ base = PolyQ::monomial(xj, a * Rat(2)) + B;
  PolyQ l1 = (base + S) * Rat(1, 2);
  PolyQ l2 = (base - S) * (Rat(1) / (a * Rat(2)));
  if (!(l1 * l2 == q)) throw InternalError("split_rational_conic: verification failed");
  return std::make_pair(l1, l2);
}

std::optional<std::pair<Rat, PolyQ>> match_linear_cube(const PolyQ& f3) {
  const int n = f3.nvars();
  for (int i = 0; i < n; ++i) {
    Mono cube(n);
    cube.e[i] = 3;
    Rat ci = f3.coeff(cube);
    if (ci.is_zero()) continue;
    PolyQ l = PolyQ::var(n, i);
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      Mono m(n);
      m.e[i] = 2;
      m.e[k] = 1;
      Rat ck = f3.coeff(m) / (ci * Rat(3));
      Mono xk(n);
      xk.e[k] = 1;
      l.add_term(xk, ck);
    }
    if (l.pow(3) * ci == f3) return std::make_pair(ci, l);
    return std::nullopt;  // the x_i^3 coefficient pins L uniquely
  }
  return std::nullopt;
}

std::optional<SquareLineSplit> match_square_line(const PolyQ& f3) {
  // L divides every partial derivative (each is L * linear), so candidates
  // come from splitting any single nonzero partial.
  for (auto& p : f3.gradient()) {
    if (p.is_zero()) continue;
    auto split = split_rational_conic(p);
    if (!split) return std::nullopt;
    for (const PolyQ* cand : {&split->first, &split->second}) {
      auto q1 = divide_by_linear(f3, *cand);
      if (!q1) continue;
      auto q2 = divide_by_linear(*q1, *cand);
      if (!q2) continue;
      if (divide_by_linear(*q2, *cand)) continue;  // a cube, not L^2 * M
      return SquareLineSplit{*cand, *q2};
    }
    return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// exact solving of the singular locus
// ---------------------------------------------------------------------------

namespace {

// dense univariate over any field, for gcds over extensions
template <class K>
std::vector<K> utrim(std::vector<K> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

template <class K>
std::vector<K> umod(std::vector<K> a, const std::vector<K>& b) {
  K lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    K f = a.back() * lead_inv;
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
    a = utrim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

template <class K>
std::vector<K> ugcd(std::vector<K> a, std::vector<K> b) {
  a = utrim(std::move(a));
  b = utrim(std::move(b));
  while (!b.empty()) {
    auto r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    K inv = a.back().inv();
    for (auto& x : a) x = x * inv;
  }
  return a;
}

// coefficients of p (a polynomial whose support uses only `var`) as dense list
template <class K>
std::vector<K> univariate_in(const Poly<K>& p, int var) {
  std::vector<K> c(std::max(p.degree_in(var) + 1, 0), K());
  for (auto& [m, k] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var && m.e[i] != 0) throw InternalError("univariate_in: extra variables present");
    c[m.e[var]] = k;
  }
  return utrim(std::move(c));
}

struct Solve2 {
  std::vector<std::array<Rat, 2>> rational_pts;
  struct ExtPt {
    FieldPtr field;
    std::array<AlgElem, 2> xy;
  };
  std::vector<ExtPt> ext_pts;
  bool complete = true;
  std::optional<UPoly> blocker;
};

// All solutions of a zero-dimensional system in two variables, over Q and
// quadratic extensions; records an obstruction otherwise.
Solve2 solve_0dim_2(const std::vector<PolyQ>& gens) {
  Solve2 out;
  auto kept = eliminate(std::span<const PolyQ>(gens), 1);  // keep x1 (index 1)
  UPoly g;
  for (auto& k : kept) {
    auto c = univariate_in(k, 1);
    g = g.is_zero() ? UPoly(c) : gcd_monic(g, UPoly(c));
  }
  if (g.is_zero()) throw InternalError("solve_0dim_2: eliminant vanished (not 0-dimensional)");
  if (g.deg() == 0) return out;  // no solutions
  auto fac = factor_squarefree(g);
  if (!fac.complete) {
    out.complete = false;
    out.blocker = fac.factors.back();
  }
  for (auto& f : fac.factors) {
    if (f.deg() == 1) {
      Rat y = -f[0] / f[1];
      // substitute x1 = y: univariate in x0
      UPoly h;
      for (auto& p : gens) {
        PolyQ sub(p.nvars());
        for (auto& [m, c] : p.terms()) {
          Mono m2 = m;
          m2.e[1] = 0;
          sub.add_term(m2, c * y.pow(m.e[1]));
        }
        if (sub.is_zero()) continue;
        auto cs = univariate_in(sub, 0);
        h = h.is_zero() ? UPoly(cs) : gcd_monic(h, UPoly(cs));
      }
      if (h.is_zero() || h.deg() < 1)
        throw InternalError("solve_0dim_2: no fiber above eliminant root");
      auto hf = factor_squarefree(h);
      if (!hf.complete) {
        out.complete = false;
        out.blocker = hf.factors.back();
      }
      for (auto& hf1 : hf.factors) {
        if (hf1.deg() == 1) {
          out.rational_pts.push_back({-hf1[0] / hf1[1], y});
        } else if (hf1.deg() == 2) {
          auto field = std::make_shared<const NumberField>(hf1, "s");
          out.ext_pts.push_back({field, {AlgElem::generator(field), AlgElem(field, {y})}});
        } else {
          out.complete = false;
          out.blocker = hf1;
        }
      }
    } else if (f.deg() == 2) {
      auto field = std::make_shared<const NumberField>(f, "s");
      AlgElem y = AlgElem::generator(field);
      // substitute x1 = s over the extension, gcd in x0
      std::vector<AlgElem> h;
      for (auto& p : gens) {
        PolyE sub(p.nvars());
        for (auto& [m, c] : p.terms()) {
          Mono m2 = m;
          m2.e[1] = 0;
          AlgElem v(field, {c});
          for (int k = 0; k < m.e[1]; ++k) v = v * y;
          sub.add_term(m2, v);
        }
        if (sub.is_zero()) continue;
        auto cs = univariate_in(sub, 0);
        h = h.empty() ? cs : ugcd(std::move(h), cs);
      }
      if (h.size() < 2) throw InternalError("solve_0dim_2: no fiber above quadratic factor");
      if (h.size() == 2) {  // linear: x0 = -c0/c1
        AlgElem x = -(h[0] / h[1]);
        out.ext_pts.push_back({field, {x, y}});
      } else if (h.size() == 3) {
        // quadratic over the quadratic field; solvable only if the
        // discriminant is a square in the same field
        AlgElem a = h[2], b = h[1], c = h[0];
        AlgElem disc = b * b - a * c * AlgElem(Rat(4));
        auto sq = sqrt_in_field(field, disc);
        if (sq) {
          AlgElem twoa_inv = (a * AlgElem(Rat(2))).inv();
          out.ext_pts.push_back({field, {(-b + *sq) * twoa_inv, y}});
          out.ext_pts.push_back({field, {(-b - *sq) * twoa_inv, y}});
        } else {
          out.complete = false;
          out.blocker = f;
        }
      } else {
        out.complete = false;
        out.blocker = f;
      }
    } else {
      out.complete = false;
      out.blocker = f;
    }
  }
  return out;
}

}  // namespace

std::optional<AlgElem> sqrt_in_field(const FieldPtr& f, const AlgElem& alpha) {
  if (alpha.is_zero()) return AlgElem();
  if (f->degree() != 2) return std::nullopt;
  Rat m1 = f->modulus[1], m0 = f->modulus[0];
  const auto& cs = alpha.coeffs();
  Rat p = cs.empty() ? Rat(0) : cs[0];
  Rat q = cs.size() > 1 ? cs[1] : Rat(0);
  if (q.is_zero()) {
    if (auto r = p.sqrt_exact()) return AlgElem(f, {*r});
  }
  // (a + b s)^2 = (a^2 - m0 b^2) + (2ab - m1 b^2) s
  // with b != 0: a = (q + m1 b^2) / (2b) and
  // (m1^2 - 4 m0) B^2 + (2 q m1 - 4 p) B + q^2 = 0 for B = b^2
  Rat A2 = m1 * m1 - m0 * Rat(4), A1 = q * m1 * Rat(2) - p * Rat(4), A0 = q * q;
  UPoly pol({A0, A1, A2});
  for (auto& B : rational_roots(pol)) {
    if (B.sign() <= 0) continue;
    auto b = B.sqrt_exact();
    if (!b) continue;
    Rat a = (q + m1 * B) / (*b * Rat(2));
    AlgElem cand(f, {a, *b});
    if (cand * cand == alpha) return cand;
  }
  return std::nullopt;
}

namespace {

// local multiplicity of an ideal at a point: stabilized truncated quotient
template <class K>
long local_multiplicity(const std::vector<Poly<K>>& gens, std::span<const K> pt, int nmax = 16) {
  std::vector<Poly<K>> tr;
  for (auto& g : gens) tr.push_back(g.translate(pt));
  int cap = nmax + 1;
  auto lms = germ_detail::truncated_jacobian_staircase(tr, gens[0].nvars(), cap);
  auto dims = staircase_dims_by_cutoff(std::span<const Mono>(lms), gens[0].nvars(), cap);
  for (int N = 1; N <= nmax; ++N)
    if (dims[N] == dims[N + 1]) return dims[N];
  return -1;  // not isolated there
}

}  // namespace

long curve_milnor_at(const PolyQ& f3, const CurvePoint& pt) {
  if (pt.is_rational()) {
    const auto& p = std::get<P2Point>(pt.coords);
    int ch = p.chart();
    PolyQ g = f3.set_var_to_one(ch);
    std::vector<Rat> coords;
    for (int i = 0; i < 3; ++i)
      if (i != ch) coords.push_back(p.x[i] / p.x[ch]);
    auto mr = curve_local_milnor(g, std::span<const Rat>(coords));
    if (!mr.isolated) throw InternalError("curve_milnor_at: non-isolated curve point");
    return mr.mu;
  }
  const auto& p = std::get<P2PointExt>(pt.coords);
  int ch = p.chart();
  PolyE g = embed(f3, p.field).set_var_to_one(ch);
  AlgElem inv = p.x[ch].inv();
  std::vector<AlgElem> coords;
  for (int i = 0; i < 3; ++i)
    if (i != ch) coords.push_back(p.x[i] * inv);
  auto mr = curve_local_milnor(g, std::span<const AlgElem>(coords));
  if (!mr.isolated) throw InternalError("curve_milnor_at: non-isolated curve point");
  return mr.mu;
}

namespace {

CurveSingularLocus singular_locus_impl(const PolyQ& f3, bool lenient) {
  if (f3.nvars() != 3 || f3.is_zero() || f3.degree() != 3 || !f3.is_homogeneous())
    throw ShapeError("singular_locus: need a nonzero homogeneous ternary cubic");
  CurveSingularLocus out;
  std::vector<PolyQ> grad;
  for (auto& g : f3.gradient())
    if (!g.is_zero()) grad.push_back(g);
  MonomialOrder ord = MonomialOrder::grevlex();
  auto gb = groebner(std::span<const PolyQ>(grad), ord);
  auto lms = leading_monomials<Rat>(std::span<const PolyQ>(gb), ord);
  if (staircase_count(std::span<const Mono>(lms), 3).has_value()) {
    out.dimension = -1;  // cone vertex only: smooth projective curve
    return out;
  }
  int kd = staircase_krull_dim(std::span<const Mono>(lms), 3);
  if (kd >= 2) {
    out.dimension = 1;
    return out;
  }
  out.dimension = 0;

  // chart x0 = 1 catches (1:*:*); then x0=0, x1=1; then the point (0:0:1)
  std::vector<PolyQ> c0;
  for (auto& g : grad) {
    PolyQ h = g.set_var_to_one(0);
    if (!h.is_zero()) c0.push_back(h);
  }
  Solve2 s0 = solve_0dim_2(c0);
  for (auto& [u, v] : s0.rational_pts) {
    CurvePoint cp{P2Point::make(Rat(1), u, v), 0};
    cp.mu = curve_milnor_at(f3, cp);
    out.points.push_back(cp);
  }
  for (auto& e : s0.ext_pts) {
    CurvePoint cp{P2PointExt{e.field, {AlgElem(Rat(1)), e.xy[0], e.xy[1]}}, 0};
    cp.mu = curve_milnor_at(f3, cp);
    out.points.push_back(cp);
  }

  // x0 = 0, x1 = 1: univariate system in x2
  UPoly h1;
  for (auto& g : grad) {
    PolyQ z(3);
    for (auto& [m, c] : g.terms())
      if (m.e[0] == 0) z.add_term(m, c);
    if (z.is_zero()) continue;
    PolyQ w = z.set_var_to_one(0).set_var_to_one(0);  // drop x0 then x1
    if (w.is_zero()) continue;
    auto cs = univariate_in(w, 0);
    h1 = h1.is_zero() ? UPoly(cs) : gcd_monic(h1, UPoly(cs));
  }
  if (!h1.is_zero() && h1.deg() >= 1) {
    auto fac = factor_squarefree(h1);
    if (!fac.complete) {
      s0.complete = false;
      s0.blocker = fac.factors.back();
    }
    for (auto& f : fac.factors) {
      if (f.deg() == 1) {
        CurvePoint cp{P2Point::make(Rat(0), Rat(1), -f[0] / f[1]), 0};
        cp.mu = curve_milnor_at(f3, cp);
        out.points.push_back(cp);
      } else if (f.deg() == 2) {
        auto field = std::make_shared<const NumberField>(f, "s");
        CurvePoint cp{
            P2PointExt{field, {AlgElem(), AlgElem(Rat(1)), AlgElem::generator(field)}}, 0};
        cp.mu = curve_milnor_at(f3, cp);
        out.points.push_back(cp);
      } else {
        s0.complete = false;
        s0.blocker = f;
      }
    }
  }

  // the point (0:0:1)
  {
    std::vector<Rat> p001{Rat(0), Rat(0), Rat(1)};
    bool sing = true;
    for (auto& g : grad)
      if (!g.eval(std::span<const Rat>(p001)).is_zero()) { sing = false; break; }
    if (sing) {
      CurvePoint cp{P2Point::make(Rat(0), Rat(0), Rat(1)), 0};
      cp.mu = curve_milnor_at(f3, cp);
      out.points.push_back(cp);
    }
  }

  out.points_complete = s0.complete;
  if (!s0.complete) out.blocking_minpoly = s0.blocker;

  if (out.points_complete) {
    for (auto& p : out.points) {
      out.total_mu += p.mu * p.multiplicity_in_count();
      out.distinct_count += p.multiplicity_in_count();
    }
  } else {
    // count through quotient dimensions; points list stays partial
    long total = 0, distinct = 0;
    {
      auto full = c0;
      auto qd = quotient_dim(std::span<const PolyQ>(full));
      if (!qd) throw InternalError("singular_locus: chart ideal not zero-dimensional");
      total += *qd;
      // radical via squarefree eliminants in both directions (Seidenberg)
      std::vector<PolyQ> rad = c0;
      {
        auto kept = eliminate(std::span<const PolyQ>(c0), 1);
        UPoly e1;
        for (auto& k : kept) {
          auto cs = univariate_in(k, 1);
          e1 = e1.is_zero() ? UPoly(cs) : gcd_monic(e1, UPoly(cs));
        }
        if (e1.deg() >= 1) {
          UPoly sf = squarefree_part(e1);
          PolyQ p(2);
          for (int i = 0; i <= sf.deg(); ++i) p.add_term(Mono({0, i}), sf[i]);
          rad.push_back(p);
        }
        // swap variables to eliminate the other direction
        std::vector<PolyQ> sw;
        for (auto& g : c0) {
          PolyQ s(2);
          for (auto& [m, c] : g.terms()) s.add_term(Mono({m.e[1], m.e[0]}), c);
          sw.push_back(s);
        }
        auto kept2 = eliminate(std::span<const PolyQ>(sw), 1);
        UPoly e2;
        for (auto& k : kept2) {
          auto cs = univariate_in(k, 1);
          e2 = e2.is_zero() ? UPoly(cs) : gcd_monic(e2, UPoly(cs));
        }
        if (e2.deg() >= 1) {
          UPoly sf = squarefree_part(e2);
          PolyQ p(2);
          for (int i = 0; i <= sf.deg(); ++i) p.add_term(Mono({i, 0}), sf[i]);
          rad.push_back(p);
        }
      }
      auto qr = quotient_dim(std::span<const PolyQ>(rad));
      if (!qr) throw InternalError("singular_locus: radical ideal not zero-dimensional");
      distinct += *qr;
    }
    if (!h1.is_zero() && h1.deg() >= 1) {
      total += h1.deg();
      distinct += squarefree_part(h1).deg();
    }
    {
      std::vector<Rat> p001{Rat(0), Rat(0), Rat(1)};
      bool sing = true;
      for (auto& g : grad)
        if (!g.eval(std::span<const Rat>(p001)).is_zero()) { sing = false; break; }
      if (sing) {
        std::vector<PolyQ> c2;
        for (auto& g : grad) {
          PolyQ h = g.set_var_to_one(2);
          if (!h.is_zero()) c2.push_back(h);
        }
        std::vector<Rat> origin{Rat(0), Rat(0)};
        long lm = local_multiplicity(c2, std::span<const Rat>(origin));
        if (lm < 0) throw InternalError("singular_locus: unexpected non-isolated chart point");
        total += lm;
        distinct += 1;
      }
    }
    out.total_mu = total;
    out.distinct_count = distinct;
    if (!lenient)
      throw UnsupportedExtensionError(
          "singular point coordinates need an extension of degree > 2", *out.blocking_minpoly);
  }
  return out;
}

}  // namespace

CurveSingularLocus singular_locus(const PolyQ& f3) { return singular_locus_impl(f3, false); }
CurveSingularLocus singular_locus_lenient(const PolyQ& f3) {
  return singular_locus_impl(f3, true);
}

CubicType classify_cubic(const PolyQ& f3) {
  if (f3.nvars() != 3 || f3.is_zero() || f3.degree() != 3 || !f3.is_homogeneous())
    throw ShapeError("classify_cubic: need a nonzero homogeneous ternary cubic");
  if (match_linear_cube(f3)) return CubicType::TripleLine;
  if (match_square_line(f3)) return CubicType::DoubleLine;
  auto locus = singular_locus_lenient(f3);
  if (locus.dimension == -1) return CubicType::General;
  if (locus.dimension != 0)
    throw InternalError("classify_cubic: reduced cubic with a singular curve component");
  switch (locus.distinct_count) {
    case 1:
      switch (locus.total_mu) {
        case 1: return CubicType::Nodal;
        case 2: return CubicType::Cuspidal;
        case 3: return CubicType::ConicTangent;
        case 4: return CubicType::ThreeLines;
        default: break;
      }
      break;
    case 2:
      if (locus.total_mu == 2) return CubicType::ConicChord;
      break;
    case 3:
      if (locus.total_mu == 3) return CubicType::Triangle;
      break;
    default: break;
  }
  throw InternalError("classify_cubic: singular locus outside the nine classes");
}

// ---------------------------------------------------------------------------
// normalizing maps
// ---------------------------------------------------------------------------

namespace {

MatQ mat_from_cols(const std::vector<Rat>& c0, const std::vector<Rat>& c1,
                   const std::vector<Rat>& c2) {
  MatQ m(3, 3);
  for (int i = 0; i < 3; ++i) {
    m.a[i][0] = c0[i];
    m.a[i][1] = c1[i];
    m.a[i][2] = c2[i];
  }
  return m;
}

std::vector<Rat> unit_vec(int i) {
  std::vector<Rat> v(3, Rat(0));
  v[i] = Rat(1);
  return v;
}

// invertible matrix with prescribed columns at given slots, completed with
// standard basis vectors (first combination that works)
MatQ complete_columns(const std::vector<std::pair<int, std::vector<Rat>>>& fixed) {
  std::vector<int> free_slots;
  for (int i = 0; i < 3; ++i) {
    bool used = false;
    for (auto& [s, v] : fixed)
      if (s == i) used = true;
    if (!used) free_slots.push_back(i);
  }
  std::vector<int> basis_pick(free_slots.size(), 0);
  std::function<std::optional<MatQ>(size_t, unsigned)> rec =
      [&](size_t k, unsigned used_mask) -> std::optional<MatQ> {
    if (k == free_slots.size()) {
      std::vector<std::vector<Rat>> cols(3);
      for (auto& [s, v] : fixed) cols[s] = v;
      for (size_t i = 0; i < free_slots.size(); ++i) cols[free_slots[i]] = unit_vec(basis_pick[i]);
      MatQ m = mat_from_cols(cols[0], cols[1], cols[2]);
      if (!m.det().is_zero()) return m;
      return std::nullopt;
    }
    for (int b = 0; b < 3; ++b) {
      if (used_mask & (1u << b)) continue;
      basis_pick[k] = b;
      if (auto m = rec(k + 1, used_mask | (1u << b))) return m;
    }
    return std::nullopt;
  };
  auto m = rec(0, 0);
  if (!m) throw InternalError("complete_columns: no completion found");
  return *m;
}

AffineMap gl3_from_inverse(const MatQ& minv) {
  return AffineMap::from_inverse(minv, {Rat(0), Rat(0), Rat(0)}, Rat(1));
}

// embed a 2x2 inverse-image matrix acting on (x0, x1), fixing x2
AffineMap gl2_embed_01(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  MatQ m = MatQ::identity(3);
  m.a[0][0] = a;
  m.a[0][1] = b;
  m.a[1][0] = c;
  m.a[1][1] = d;
  return gl3_from_inverse(m);
}

// shear: image of x_target under T^{-1} gains coefficients on the others
AffineMap shear(int target, const std::vector<std::pair<int, Rat>>& adds) {
  MatQ m = MatQ::identity(3);
  for (auto& [j, c] : adds) m.a[target][j] = c;
  return gl3_from_inverse(m);
}

AffineMap diag_scale(const Rat& r0, const Rat& r1, const Rat& r2, const Rat& codomain) {
  MatQ m = MatQ::identity(3);
  m.a[0][0] = r0;
  m.a[1][1] = r1;
  m.a[2][2] = r2;
  return AffineMap::from_inverse(m, {Rat(0), Rat(0), Rat(0)}, codomain);
}

struct Normalizer {
  PolyQ cur;
  AffineMap total;

  explicit Normalizer(PolyQ f3) : cur(std::move(f3)) {}
  void apply(const AffineMap& step) {
    cur = substitute_affine(cur, step);
    total = step.compose(total);
  }
};

// carry the binary linear form la*x0 + lb*x1 onto x1, fixing x2
AffineMap binary_line_to_x1(const Rat& la, const Rat& lb) {
  MatQ b = MatQ::identity(3);
  b.a[1][0] = la;
  b.a[1][1] = lb;
  b.a[0][0] = lb.is_zero() ? Rat(0) : Rat(1);
  b.a[0][1] = lb.is_zero() ? Rat(1) : Rat(0);
  return map_lines_to_coords(b);
}

// move the rational point P so that it becomes (0:0:1): the inverse-image
// matrix carries the new e2 back onto P, so P sits in its column 2
AffineMap map_point_to_e2(const P2Point& p) {
  std::vector<Rat> col{p.x[0], p.x[1], p.x[2]};
  MatQ m = complete_columns({{2, col}});
  return gl3_from_inverse(m);
}

// carry old linear forms onto new coordinate lines: rows of B are the forms,
// the inverse-image matrix is B^{-1}
AffineMap map_lines_to_coords(const MatQ& b) {
  auto inv = b.inverse();
  if (!inv) throw InternalError("map_lines_to_coords: dependent forms");
  return gl3_from_inverse(*inv);
}

Rat coeff3(const PolyQ& p, int a, int b, int c) { return p.coeff(Mono({a, b, c})); }

PolyQ drop_last_var(const PolyQ& p) {
  // context (x0,x1,x2) -> (x0,x1); requires no x2 dependence
  if (p.degree_in(2) > 0) throw InternalError("drop_last_var: x2 present");
  PolyQ r(2);
  for (auto& [m, c] : p.terms()) r.add_term(Mono({m.e[0], m.e[1]}), c);
  return r;
}

PolyQ lift_binary(const PolyQ& p) {
  PolyQ r(3);
  for (auto& [m, c] : p.terms()) r.add_term(Mono({m.e[0], m.e[1], 0}), c);
  return r;
}

NormalizingMap unavailable(std::string reason) {
  NormalizingMap n;
  n.available = false;
  n.reason = std::move(reason);
  return n;
}

NormalizingMap finish(Normalizer& nz, const PolyQ& target) {
  if (nz.cur != target)
    throw InternalError("normalizing_map: verification against the normal form failed");
  NormalizingMap n;
  n.available = true;
  n.map = nz.total;
  return n;
}

std::optional<P2Point> single_rational_point(const CurveSingularLocus& locus) {
  if (locus.points.size() != 1 || !locus.points[0].is_rational()) return std::nullopt;
  return std::get<P2Point>(locus.points[0].coords);
}

NormalizingMap normalize_nodal(const PolyQ& f3, const CurveSingularLocus& locus) {
  auto P = single_rational_point(locus);
  if (!P) return unavailable("nodal: singular point not rational");
  Normalizer nz(f3);
  nz.apply(map_point_to_e2(*P));
  // now f3 = x2*q(x0,x1) + c(x0,x1)
  PolyQ q = drop_last_var(coeff_of_power(nz.cur, 2, 1));
  auto split = split_binary_quadratic(q);
  if (!split) return unavailable("nodal: tangent cone does not split over Q");
  // send l1 -> x0, l2 -> x1
  MatQ b = MatQ::identity(3);
  b.a[0][0] = split->first.coeff(Mono({1, 0}));
  b.a[0][1] = split->first.coeff(Mono({0, 1}));
  b.a[1][0] = split->second.coeff(Mono({1, 0}));
  b.a[1][1] = split->second.coeff(Mono({0, 1}));
  nz.apply(map_lines_to_coords(b));
  Rat s = coeff3(nz.cur, 1, 1, 1);
  if (s.is_zero()) throw InternalError("normalize_nodal: lost the node cross term");
  nz.apply(shear(2, {{0, -coeff3(nz.cur, 2, 1, 0) / s}, {1, -coeff3(nz.cur, 1, 2, 0) / s}}));
  Rat a = coeff3(nz.cur, 3, 0, 0), b = coeff3(nz.cur, 0, 3, 0);
  if (a.is_zero() || b.is_zero()) throw InternalError("normalize_nodal: degenerate cubic part");
  auto sigma = (a / b).cbrt_exact();
  if (!sigma) return unavailable("nodal: scale needs an irrational cube root");
  // w*a = 1, w*b*sigma^3 = 1, w*s*sigma*tau = 1
  Rat w = a.inv();
  Rat tau = a / (s * *sigma);
  nz.apply(diag_scale(Rat(1), *sigma, tau, w));
  return finish(nz, cubic_normal_form(CubicType::Nodal));
}

NormalizingMap normalize_cuspidal(const PolyQ& f3, const CurveSingularLocus& locus) {
  auto P = single_rational_point(locus);
  if (!P) return unavailable("cuspidal: singular point not rational");
  Normalizer nz(f3);
  nz.apply(map_point_to_e2(*P));
  PolyQ q = drop_last_var(coeff_of_power(nz.cur, 2, 1));
  // q = c * l^2 with l rational (unique cusp tangent)
  Rat qa = q.coeff(Mono({2, 0})), qb = q.coeff(Mono({1, 1})), qc = q.coeff(Mono({0, 2}));
  Rat la, lb, c;
  if (!qa.is_zero()) {
    c = qa;
    la = Rat(1);
    lb = qb / (qa * Rat(2));
  } else if (!qc.is_zero()) {
    c = qc;
    la = Rat(0);
    lb = Rat(1);
  } else {
    throw InternalError("normalize_cuspidal: tangent cone not a double line");
  }
  {
    PolyQ l(2);
    l.add_term(Mono({1, 0}), la);
    l.add_term(Mono({0, 1}), lb);
    if (!(l * l * c == q)) throw InternalError("normalize_cuspidal: tangent cone not a double line");
  }
  nz.apply(binary_line_to_x1(la, lb));
  Rat s = coeff3(nz.cur, 0, 2, 1);
  if (s.is_zero()) throw InternalError("normalize_cuspidal: lost x1^2 x2 term");
  nz.apply(shear(2, {{0, -coeff3(nz.cur, 1, 2, 0) / s}, {1, -coeff3(nz.cur, 0, 3, 0) / s}}));
  Rat a = coeff3(nz.cur, 3, 0, 0), b = coeff3(nz.cur, 2, 1, 0);
  if (a.is_zero()) throw InternalError("normalize_cuspidal: no x0^3 term");
  if (!b.is_zero()) {
    nz.apply(shear(0, {{1, -b / (a * Rat(3))}}));
    nz.apply(shear(2, {{0, -coeff3(nz.cur, 1, 2, 0) / s}, {1, -coeff3(nz.cur, 0, 3, 0) / s}}));
  }
  a = coeff3(nz.cur, 3, 0, 0);
  // w*a*rho^3 = -1 and w*s*tau = 1
  Rat w = -a.inv();
  nz.apply(diag_scale(Rat(1), Rat(1), -a / s, w));
  return finish(nz, cubic_normal_form(CubicType::Cuspidal));
}

NormalizingMap normalize_conic_tangent(const PolyQ& f3, const CurveSingularLocus& locus) {
  auto P = single_rational_point(locus);
  if (!P) return unavailable("conic-plus-tangent: singular point not rational");
  Normalizer nz(f3);
  nz.apply(map_point_to_e2(*P));
  PolyQ q = drop_last_var(coeff_of_power(nz.cur, 2, 1));
  Rat qa = q.coeff(Mono({2, 0})), qb = q.coeff(Mono({1, 1})), qc = q.coeff(Mono({0, 2}));
  Rat la, lb;
  if (!qa.is_zero()) {
    la = Rat(1);
    lb = qb / (qa * Rat(2));
  } else if (!qc.is_zero()) {
    la = Rat(0);
    lb = Rat(1);
  } else {
    throw InternalError("normalize_conic_tangent: tangent cone not a double line");
  }
  nz.apply(binary_line_to_x1(la, lb));
  // the line component is x1 now
  PolyQ x1 = PolyQ::var(3, 1);
  auto C = divide_by_linear(nz.cur, x1);
  if (!C) throw InternalError("normalize_conic_tangent: x1 does not divide the cubic");
  Rat s = C->coeff(Mono({0, 1, 1}));
  Rat alpha = C->coeff(Mono({2, 0, 0}));
  if (s.is_zero() || alpha.is_zero())
    throw InternalError("normalize_conic_tangent: degenerate conic factor");
  nz.apply(shear(2, {{0, -C->coeff(Mono({1, 1, 0})) / s}, {1, -C->coeff(Mono({0, 2, 0})) / s}}));
  // now f3 = alpha x0^2 x1 + s x1^2 x2
  Rat w = alpha.inv();
  nz.apply(diag_scale(Rat(1), Rat(1), alpha / s, w));
  return finish(nz, cubic_normal_form(CubicType::ConicTangent));
}

NormalizingMap normalize_conic_chord(const PolyQ& f3, const CurveSingularLocus& locus) {
  if (locus.points.size() != 2 || !locus.points[0].is_rational() ||
      !locus.points[1].is_rational())
    return unavailable("conic-plus-chord: nodes are conjugate over a quadratic extension");
  auto N1 = std::get<P2Point>(locus.points[0].coords);
  auto N2 = std::get<P2Point>(locus.points[1].coords);
  Normalizer nz(f3);
  MatQ m = complete_columns({{1, {N1.x[0], N1.x[1], N1.x[2]}}, {2, {N2.x[0], N2.x[1], N2.x[2]}}});
  nz.apply(gl3_from_inverse(m));
  // chord through the nodes is x0 = 0
  auto C = divide_by_linear(nz.cur, PolyQ::var(3, 0));
  if (!C) throw InternalError("normalize_conic_chord: x0 does not divide the cubic");
  Rat d = C->coeff(Mono({0, 1, 1}));
  if (d.is_zero()) throw InternalError("normalize_conic_chord: conic is degenerate");
  Rat b = C->coeff(Mono({1, 1, 0})), c = C->coeff(Mono({1, 0, 1}));
  // x1 -> x1 - (c/d) x0; x2 -> x2 - (b/d) x0
  nz.apply(shear(1, {{0, -c / d}}));
  nz.apply(shear(2, {{0, -b / d}}));
  Rat a = coeff3(nz.cur, 3, 0, 0);
  Rat d2 = coeff3(nz.cur, 1, 1, 1);
  if (a.is_zero() || d2.is_zero())
    throw InternalError("normalize_conic_chord: degenerate reduced form");
  Rat w = a.inv();
  nz.apply(diag_scale(Rat(1), Rat(1), a / d2, w));
  return finish(nz, cubic_normal_form(CubicType::ConicChord));
}

NormalizingMap normalize_three_lines(const PolyQ& f3, const CurveSingularLocus& locus) {
  auto P = single_rational_point(locus);
  if (!P) return unavailable("three-lines: singular point not rational");
  Normalizer nz(f3);
  nz.apply(map_point_to_e2(*P));
  if (nz.cur.degree_in(2) > 0)
    throw InternalError("normalize_three_lines: cubic not a cone over the singular point");
  PolyQ c3 = drop_last_var(nz.cur);
  // rational roots of the binary cubic, as z = x0/x1 (infinity = the line x1)
  UPoly uz({c3.coeff(Mono({0, 3})), c3.coeff(Mono({1, 2})), c3.coeff(Mono({2, 1})),
            c3.coeff(Mono({3, 0}))});
  std::vector<Rat> zroots = rational_roots(uz);
  bool root_at_inf = c3.coeff(Mono({3, 0})).is_zero();
  int nroots = static_cast<int>(zroots.size()) + (root_at_inf ? 1 : 0);
  if (nroots == 3) return unavailable("three-lines: all three lines rational, the target form has conjugate lines");
  if (nroots == 0) return unavailable("three-lines: lines conjugate over a cubic extension");
  if (nroots != 1) throw InternalError("normalize_three_lines: unexpected rational root count");
  // the rational line, as a binary linear form
  PolyQ ell(2);
  if (root_at_inf) {
    ell.add_term(Mono({0, 1}), Rat(1));  // x1
  } else {
    ell.add_term(Mono({1, 0}), Rat(1));
    ell.add_term(Mono({0, 1}), -zroots[0]);
  }
  auto quot = divide_by_linear(lift_binary(c3), lift_binary(ell));
  if (!quot) throw InternalError("normalize_three_lines: rational line does not divide");
  PolyQ kappa = drop_last_var(*quot);
  Rat al = kappa.coeff(Mono({2, 0})), be = kappa.coeff(Mono({1, 1})), ga = kappa.coeff(Mono({0, 2}));
  Rat D = be * be - al * ga * Rat(4);
  auto s2 = (D / Rat(-3)).sqrt_exact();
  if (!s2 || s2->is_zero())
    return unavailable("three-lines: conjugate pair lies outside Q(sqrt(-3))");
  Rat s = *s2;
  if (al.is_zero()) throw InternalError("normalize_three_lines: quadratic factor has a rational root");
  // Moebius through three points: z0 -> -1, z+ -> (1 + theta)/2 with
  // z+ = p + q*theta, theta^2 = -3
  Rat p = -be / (al * Rat(2)), q = s / (al * Rat(2));
  // unknowns (a, b, c, d) of M(z) = (a z + b)/(c z + d)
  MatQ sys(3, 4);
  if (root_at_inf) {
    // M(inf) = -1: a = -c
    sys.a[0][0] = Rat(1);
    sys.a[0][2] = Rat(1);
  } else {
    Rat z0 = zroots[0];
    sys.a[0][0] = z0;
    sys.a[0][1] = Rat(1);
    sys.a[0][2] = z0;
    sys.a[0][3] = Rat(1);
  }
  // rational part: a p + b - (1/2)(c p + d) + (3/2) c q = 0
  sys.a[1][0] = p;
  sys.a[1][1] = Rat(1);
  sys.a[1][2] = -p * Rat(1, 2) + q * Rat(3, 2);
  sys.a[1][3] = Rat(-1, 2);
  // theta part: a q - (1/2) c q - (1/2)(c p + d) = 0
  sys.a[2][0] = q;
  sys.a[2][1] = Rat(0);
  sys.a[2][2] = -q * Rat(1, 2) - p * Rat(1, 2);
  sys.a[2][3] = Rat(-1, 2);
  auto ker = sys.kernel_basis();
  if (ker.empty()) throw InternalError("normalize_three_lines: Moebius system has no kernel");
  std::optional<MatQ> moebius;
  for (auto& v : ker) {
    MatQ mm(2, 2);
    mm.a[0][0] = v[0];
    mm.a[0][1] = v[1];
    mm.a[1][0] = v[2];
    mm.a[1][1] = v[3];
    if (!mm.det().is_zero()) { moebius = mm; break; }
  }
  if (!moebius) throw InternalError("normalize_three_lines: Moebius matrix degenerate");
  // new cubic = c3(A x) with A = M^{-1}; inverse-image matrix is A itself
  MatQ A = *moebius->inverse();
  Normalizer nz2(nz.cur);
  nz2.total = nz.total;
  nz2.apply(gl2_embed_01(A.a[0][0], A.a[0][1], A.a[1][0], A.a[1][1]));
  PolyQ tgt = cubic_normal_form(CubicType::ThreeLines);
  Rat mu = coeff3(nz2.cur, 3, 0, 0);
  if (mu.is_zero()) throw InternalError("normalize_three_lines: scaling lost");
  nz2.apply(AffineMap::scaling(mu.inv()));
  return finish(nz2, tgt);
}

NormalizingMap normalize_triangle(const PolyQ& f3, const CurveSingularLocus& locus) {
  if (locus.points.size() != 3) return unavailable("triangle: vertices conjugate over an extension");
  std::array<P2Point, 3> v;
  for (int i = 0; i < 3; ++i) {
    if (!locus.points[i].is_rational())
      return unavailable("triangle: vertices conjugate over an extension");
    v[i] = std::get<P2Point>(locus.points[i].coords);
  }
  // lines through vertex pairs: cross products
  auto cross = [](const P2Point& a, const P2Point& b) {
    std::vector<Rat> l(3);
    l[0] = a.x[1] * b.x[2] - a.x[2] * b.x[1];
    l[1] = a.x[2] * b.x[0] - a.x[0] * b.x[2];
    l[2] = a.x[0] * b.x[1] - a.x[1] * b.x[0];
    return l;
  };
  // component x_i vanishes on the line missing vertex i in the normal form
  // x0*x1*x2: {x0=0} contains (0:1:0) and (0:0:1). Send line(v1,v2)->x0 etc.
  auto l0 = cross(v[1], v[2]), l1 = cross(v[0], v[2]), l2 = cross(v[0], v[1]);
  MatQ b(3, 3);
  for (int j = 0; j < 3; ++j) {
    b.a[0][j] = l0[j];
    b.a[1][j] = l1[j];
    b.a[2][j] = l2[j];
  }
  if (b.det().is_zero()) throw InternalError("normalize_triangle: concurrent lines");
  Normalizer nz(f3);
  nz.apply(map_lines_to_coords(b));
  Rat c = coeff3(nz.cur, 1, 1, 1);
  if (c.is_zero() || nz.cur.term_count() != 1)
    throw InternalError("normalize_triangle: did not reach the monomial form");
  nz.apply(AffineMap::scaling(c.inv()));
  return finish(nz, cubic_normal_form(CubicType::Triangle));
}

NormalizingMap normalize_double_line(const PolyQ& f3) {
  auto split = match_square_line(f3);
  if (!split) throw InternalError("normalize_double_line: no square factor");
  // send M -> x0, L -> x1
  MatQ b(3, 3);
  for (int j = 0; j < 3; ++j) {
    Mono m(3);
    m.e[j] = 1;
    b.a[0][j] = split->cofactor.coeff(m);
    b.a[1][j] = split->line_sq.coeff(m);
    b.a[2][j] = Rat(0);
  }
  for (int k = 0; k < 3; ++k) {
    b.a[2][0] = Rat(k == 0);
    b.a[2][1] = Rat(k == 1);
    b.a[2][2] = Rat(k == 2);
    if (!b.det().is_zero()) break;
  }
  if (b.det().is_zero()) throw InternalError("normalize_double_line: cannot complete basis");
  Normalizer nz(f3);
  nz.apply(map_lines_to_coords(b));
  Rat c = coeff3(nz.cur, 1, 2, 0);
  if (c.is_zero()) throw InternalError("normalize_double_line: lost x0*x1^2");
  nz.apply(AffineMap::scaling(c.inv()));
  return finish(nz, cubic_normal_form(CubicType::DoubleLine));
}

NormalizingMap normalize_triple_line(const PolyQ& f3) {
  auto cube = match_linear_cube(f3);
  if (!cube) throw InternalError("normalize_triple_line: not a cube");
  MatQ b(3, 3);
  for (int j = 0; j < 3; ++j) {
    Mono m(3);
    m.e[j] = 1;
    b.a[1][j] = cube->second.coeff(m);
  }
  for (int u = 0; u < 3 && b.det().is_zero(); ++u)
    for (int v = 0; v < 3 && b.det().is_zero(); ++v) {
      if (u == v) continue;
      for (int j = 0; j < 3; ++j) {
        b.a[0][j] = Rat(j == u);
        b.a[2][j] = Rat(j == v);
      }
    }
  if (b.det().is_zero()) throw InternalError("normalize_triple_line: cannot complete basis");
  Normalizer nz(f3);
  nz.apply(map_lines_to_coords(b));
  Rat c = coeff3(nz.cur, 0, 3, 0);
  nz.apply(AffineMap::scaling(c.inv()));
  return finish(nz, cubic_normal_form(CubicType::TripleLine));
}

NormalizingMap normalize_general(const PolyQ& f3) {
  // only the lambda family itself is handled: c*(x0^3+x1^3+x2^3) + d*x0x1x2
  Rat c = coeff3(f3, 3, 0, 0);
  if (!c.is_zero()) {
    PolyQ probe = f3 * c.inv();
    Rat lam = coeff3(probe, 1, 1, 1);
    if (probe == cubic_normal_form(CubicType::General, lam)) {
      NormalizingMap n;
      n.available = true;
      n.map = AffineMap::scaling(c.inv());
      n.lambda = lam;
      return n;
    }
  }
  auto n = unavailable(
      "general: normalization of a smooth cubic onto the lambda family needs irrational data");
  return n;
}

}  // namespace

NormalizingMap normalizing_map(const PolyQ& f3) {
  CubicType t = classify_cubic(f3);
  switch (t) {
    case CubicType::TripleLine: return normalize_triple_line(f3);
    case CubicType::DoubleLine: return normalize_double_line(f3);
    case CubicType::General: return normalize_general(f3);
    default: break;
  }
  auto locus = singular_locus_lenient(f3);
  switch (t) {
    case CubicType::Nodal: return normalize_nodal(f3, locus);
    case CubicType::Cuspidal: return normalize_cuspidal(f3, locus);
    case CubicType::ConicTangent: return normalize_conic_tangent(f3, locus);
    case CubicType::ConicChord: return normalize_conic_chord(f3, locus);
    case CubicType::ThreeLines: return normalize_three_lines(f3, locus);
    case CubicType::Triangle: return normalize_triangle(f3, locus);
    default: break;
  }
  throw InternalError("normalizing_map: unhandled type");
}

}  // namespace cubinf
