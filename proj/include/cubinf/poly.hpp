#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubinf/monomial.hpp"
#include "cubinf/rational.hpp"

namespace cubinf {

struct ContextError : MathError {
  using MathError::MathError;
};
struct DegreeError : MathError {
  using MathError::MathError;
};
struct ShapeError : MathError {
  using MathError::MathError;
};

/// Multivariate polynomial over an exact field K (Rat or AlgElem).
/// No stored zero coefficients; term map keeps a fixed canonical order.
template <class K>
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const K& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_[Mono(nvars)] = c;
  }

  static Poly var(int nvars, int i, const K& coeff = K(1)) {
    Poly p(nvars);
    Mono m(nvars);
    m.e[i] = 1;
    if (!coeff.is_zero()) p.terms_[m] = coeff;
    return p;
  }
  static Poly monomial(Mono m, const K& coeff) {
    Poly p(m.nvars());
    if (!coeff.is_zero()) p.terms_[std::move(m)] = coeff;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, K>& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.deg());
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
  }
  bool is_homogeneous() const {
    int d = -2;
    for (auto& [m, c] : terms_) {
      if (d == -2) d = m.deg();
      else if (m.deg() != d) return false;
    }
    return true;
  }
  bool depends_on(int var) const { return degree_in(var) > 0; }

  K coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K() : it->second;
  }
  K constant_term() const { return coeff(Mono(nvars_)); }

  void add_term(const Mono& m, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Poly operator+(const Poly& o) const {
    check_ctx(o);
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    check_ctx(o);
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Poly operator*(const Poly& o) const {
    check_ctx(o);
    Poly r(nvars_);
    for (auto& [m1, c1] : terms_)
      for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }
  Poly operator*(const K& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  Poly pow(unsigned k) const {
    Poly r(nvars_, K(1));
    Poly b = *this;
    for (; k; k >>= 1) {
      if (k & 1) r = r * b;
      if (k > 1) b = b * b;
    }
    return r;
  }

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int var) const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Mono d = m;
      d.e[var] -= 1;
      r.add_term(d, c * K(m.e[var]));
    }
    return r;
  }
  std::vector<Poly> gradient() const {
    std::vector<Poly> g;
    g.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) g.push_back(derivative(i));
    return g;
  }

  /// Sum of the terms of total degree exactly d.
  Poly degree_part(int d) const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_)
      if (m.deg() == d) r.terms_.emplace(m, c);
    return r;
  }
  /// Terms of degree >= d dropped.
  Poly truncated_below(int cap) const {
    Poly r(nvars_);
    for (auto& [m, c] : terms_)
      if (m.deg() < cap) r.terms_.emplace(m, c);
    return r;
  }

  K eval(std::span<const K> pt) const {
    K acc;
    for (auto& [m, c] : terms_) {
      K t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < m.e[i]; ++k) t = t * pt[i];
      acc = acc + t;
    }
    return acc;
  }

  /// Substitute each variable by the given polynomial (all in images' context).
  Poly substitute(std::span<const Poly> images) const {
    if (static_cast<int>(images.size()) != nvars_)
      throw ContextError("substitute: wrong image count");
    int out_n = images.empty() ? 0 : images[0].nvars();
    // power cache per variable
    std::vector<std::vector<Poly>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) pw[i].push_back(Poly(out_n, K(1)));
    Poly r(out_n);
    for (auto& [m, c] : terms_) {
      Poly t(out_n, c);
      for (int i = 0; i < nvars_; ++i) {
        while (static_cast<int>(pw[i].size()) <= m.e[i])
          pw[i].push_back(pw[i].back() * images[i]);
        if (m.e[i] > 0) t = t * pw[i][m.e[i]];
      }
      r += t;
    }
    return r;
  }

  /// x_i -> x_i + p_i (germ translation).
  Poly translate(std::span<const K> pt) const {
    std::vector<Poly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      Poly im = var(nvars_, i);
      im.add_term(Mono(nvars_), pt[i]);
      images.push_back(im);
    }
    return substitute(images);
  }

  /// Set variable `var` to 1 and drop it from the context.
  Poly set_var_to_one(int var) const {
    Poly r(nvars_ - 1);
    for (auto& [m, c] : terms_) {
      Mono k(nvars_ - 1);
      for (int i = 0, j = 0; i < nvars_; ++i)
        if (i != var) k.e[j++] = m.e[i];
      r.add_term(k, c);
    }
    return r;
  }

  /// Append a fresh variable and pad every term with it up to degree d.
  Poly homogenized(int d) const {
    if (degree() > d) throw DegreeError("homogenize: degree exceeds target");
    Poly r(nvars_ + 1);
    for (auto& [m, c] : terms_) {
      Mono k(nvars_ + 1);
      for (int i = 0; i < nvars_; ++i) k.e[i] = m.e[i];
      k.e[nvars_] = d - m.deg();
      r.terms_.emplace(k, c);
    }
    return r;
  }
  /// Inverse of homogenized(): set the last variable to 1.
  Poly dehomogenized() const { return set_var_to_one(nvars_ - 1); }

  /// Leading term under `ord` (largest). Zero poly has none.
  std::optional<std::pair<Mono, K>> leading_term(const MonomialOrder& ord) const {
    std::optional<std::pair<Mono, K>> best;
    for (auto& [m, c] : terms_)
      if (!best || ord.less(best->first, m)) best = {m, c};
    return best;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    // print in descending grevlex for readability
    std::vector<const std::pair<const Mono, K>*> ts;
    for (auto& t : terms_) ts.push_back(&t);
    MonomialOrder g = MonomialOrder::grevlex();
    std::sort(ts.begin(), ts.end(),
              [&](auto* a, auto* b) { return g.less(b->first, a->first); });
    std::string s;
    for (auto* t : ts) {
      std::string cs = t->second.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (t->first.is_one()) {
        s += cs;
      } else {
        if (cs != "1") s += cs + "*";
        s += mono_str(t->first, names);
      }
    }
    return s;
  }

 private:
  void check_ctx(const Poly& o) const {
    if (nvars_ != o.nvars_) throw ContextError("polynomial context mismatch");
  }

  int nvars_;
  std::map<Mono, K> terms_;
};

using PolyQ = Poly<Rat>;

enum class PolyBinOp { Add, Sub, Mul };

template <class K>
Poly<K> arith(const Poly<K>& p, const Poly<K>& q, PolyBinOp op) {
  switch (op) {
    case PolyBinOp::Add: return p + q;
    case PolyBinOp::Sub: return p - q;
    case PolyBinOp::Mul: return p * q;
  }
  throw MathError("arith: bad op");
}

/// Divide content out (Rat coefficients): integer-primitive with positive
/// leading sign under grevlex. The zero polynomial is returned unchanged.
inline PolyQ primitive_part(const PolyQ& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : p.terms()) {
    num_gcd = gcd_z(num_gcd, c.num());
    den_lcm = lcm_z(den_lcm, c.den());
  }
  Rat scale(den_lcm, num_gcd);
  auto lt = p.leading_term(MonomialOrder::grevlex());
  if ((lt->second * scale).sign() < 0) scale = -scale;
  return p * scale;
}

/// Coefficient of var^k, as a polynomial in the same context with var removed
/// from its support.
template <class K>
Poly<K> coeff_of_power(const Poly<K>& p, int var, int k) {
  Poly<K> r(p.nvars());
  for (auto& [m, c] : p.terms()) {
    if (m.e[var] != k) continue;
    Mono q = m;
    q.e[var] = 0;
    r.add_term(q, c);
  }
  return r;
}

/// Discriminant of p viewed as a cubic in `var`; coefficients may involve the
/// other variables. Degree in `var` must be exactly 3.
template <class K>
Poly<K> cubic_discriminant(const Poly<K>& p, int var) {
  if (p.degree_in(var) != 3) throw DegreeError("cubic_discriminant: degree in variable is not 3");
  Poly<K> a = coeff_of_power(p, var, 3), b = coeff_of_power(p, var, 2),
          c = coeff_of_power(p, var, 1), d = coeff_of_power(p, var, 0);
  // 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
  return a * b * c * d * K(18) - b * b * b * d * K(4) + b * b * c * c -
         a * c * c * c * K(4) - a * a * d * d * K(27);
}

enum class CubicRootStructure { ThreeDistinct, DoubleSimple, Triple, Zero };

inline const char* cubic_root_structure_name(CubicRootStructure s) {
  switch (s) {
    case CubicRootStructure::ThreeDistinct: return "ThreeDistinct";
    case CubicRootStructure::DoubleSimple: return "DoubleSimple";
    case CubicRootStructure::Triple: return "Triple";
    case CubicRootStructure::Zero: return "Zero";
  }
  return "?";
}

/// Root multiplicity pattern of a binary cubic form, over the algebraic
/// closure, decided by the binary discriminant and the Hessian covariant.
template <class K>
CubicRootStructure binary_cubic_root_structure(const Poly<K>& q) {
  if (q.nvars() != 2) throw ShapeError("binary_cubic_root_structure: need 2 variables");
  if (q.is_zero()) return CubicRootStructure::Zero;
  if (!q.is_homogeneous() || q.degree() != 3)
    throw ShapeError("binary_cubic_root_structure: not a homogeneous cubic");
  K a = q.coeff(Mono({3, 0})), b = q.coeff(Mono({2, 1})), c = q.coeff(Mono({1, 2})),
    d = q.coeff(Mono({0, 3}));
  K disc = a * b * c * d * K(18) - b * b * b * d * K(4) + b * b * c * c -
           a * c * c * c * K(4) - a * a * d * d * K(27);
  if (!disc.is_zero()) return CubicRootStructure::ThreeDistinct;
  // Hessian covariant q_uu*q_vv - q_uv^2 vanishes identically iff q is a cube.
  Poly<K> quu = q.derivative(0).derivative(0), qvv = q.derivative(1).derivative(1),
          quv = q.derivative(0).derivative(1);
  Poly<K> h = quu * qvv - quv * quv;
  if (h.is_zero()) return CubicRootStructure::Triple;
  return CubicRootStructure::DoubleSimple;
}

}  // namespace cubinf
