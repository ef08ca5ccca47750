#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubinf/poly.hpp"
#include "cubinf/rational.hpp"

namespace cubinf {

/// Dense univariate polynomial over Rat, coefficients by ascending power.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rat& r) { return UPoly({r}); }
  static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UPoly operator+(const UPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
  }
  UPoly operator*(const Rat& k) const {
    UPoly r = *this;
    for (auto& x : r.c_) x *= k;
    r.trim();
    return r;
  }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw MathError("UPoly: division by zero");
    UPoly q, r = *this;
    std::vector<Rat> qc(std::max<int>(deg() - d.deg() + 1, 0), Rat(0));
    Rat dl = d.lead().inv();
    while (!r.is_zero() && r.deg() >= d.deg()) {
      int k = r.deg() - d.deg();
      Rat f = r.lead() * dl;
      qc[k] = f;
      for (int i = 0; i <= d.deg(); ++i) r.c_[i + k] -= f * d.c_[i];
      r.trim();
    }
    return {UPoly(std::move(qc)), r};
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(r));
  }

  template <class K>
  K eval(const K& x) const {
    K acc;
    for (int i = deg(); i >= 0; --i) acc = acc * x + K(c_[i]);
    return acc;
  }
  Rat eval_rat(const Rat& x) const {
    Rat acc(0);
    for (int i = deg(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
  }

  /// Integer-primitive with positive leading coefficient.
  UPoly primitive() const {
    if (is_zero()) return *this;
    mpz_class g = 0, l = 1;
    for (auto& x : c_) {
      g = gcd_z(g, x.num());
      l = lcm_z(l, x.den());
    }
    Rat s(l, g);
    if ((lead() * s).sign() < 0) s = -s;
    return *this * s;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = deg(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      Rat c = c_[i];
      bool neg = c.sign() < 0;
      std::string cs = c.abs().str();
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (i == 0) {
        s += cs;
      } else {
        if (cs != "1") s += cs + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline UPoly gcd_monic(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// g / gcd(g, g'): same roots, all simple.
inline UPoly squarefree_part(const UPoly& g) {
  if (g.is_zero() || g.deg() == 0) return g;
  UPoly d = gcd_monic(g, g.derivative());
  if (d.deg() == 0) return g;
  return g.divmod(d).first;
}

/// Extended gcd: returns (g, u, v) monic g with u*a + v*b = g.
inline std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat k = r0.lead().inv();
  return {r0 * k, s0 * k, t0 * k};
}

/// All rational roots with multiplicity stripped (each root listed once).
std::vector<Rat> rational_roots(const UPoly& g);

struct UFactorization {
  std::vector<UPoly> factors;  // monic irreducible over Q, with multiplicity stripped
  bool complete = true;        // false when a factor of degree >= 3 was left unfactored
};

/// Squarefree part split into rational-linear and irreducible-quadratic
/// factors; residual degree >= 3 factors are kept whole with complete=false
/// when their irreducibility was not established.
UFactorization factor_squarefree(const UPoly& g);

/// Conversions with the multivariate side (context of one variable).
inline UPoly upoly_from_poly(const PolyQ& p) {
  if (p.nvars() != 1) throw ContextError("upoly_from_poly: need 1 variable");
  std::vector<Rat> c(p.degree() + 1 > 0 ? p.degree() + 1 : 0, Rat(0));
  for (auto& [m, k] : p.terms()) c[m.e[0]] = k;
  return UPoly(std::move(c));
}
inline PolyQ poly_from_upoly(const UPoly& u) {
  PolyQ p(1);
  for (int i = 0; i <= u.deg(); ++i) p.add_term(Mono({i}), u[i]);
  return p;
}

}  // namespace cubinf
