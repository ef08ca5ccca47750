#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cubinf/rational.hpp"
#include "cubinf/univariate.hpp"

namespace cubinf {

/// Raised when inversion in Q[s]/(m) meets a zero divisor; carries the
/// discovered proper factor of the modulus so callers can split and retry.
struct ZeroDivisorError : MathError {
  ZeroDivisorError(std::string msg, UPoly f)
      : MathError(std::move(msg)), factor(std::move(f)) {}
  UPoly factor;
};

/// Simple algebraic extension Q[s]/(m(s)), m monic squarefree of degree >= 1.
struct NumberField {
  UPoly modulus;
  std::string gen_name = "s";

  explicit NumberField(UPoly m, std::string name = "s")
      : modulus(std::move(m)), gen_name(std::move(name)) {
    if (modulus.deg() < 1) throw MathError("NumberField: modulus degree < 1");
    if (!modulus.lead().is_one()) modulus = modulus.monic();
    UPoly g = gcd_monic(modulus, modulus.derivative());
    if (g.deg() > 0) throw MathError("NumberField: modulus not squarefree");
  }
  int degree() const { return modulus.deg(); }
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q or of a simple extension. A null field means a plain
/// rational; arithmetic coerces rationals into the other operand's field.
class AlgElem {
 public:
  AlgElem() : c_{} {}
  AlgElem(long n) : AlgElem(Rat(n)) {}  // NOLINT
  AlgElem(const Rat& r) {               // NOLINT
    if (!r.is_zero()) c_.push_back(r);
  }
  AlgElem(FieldPtr f, std::vector<Rat> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    reduce();
  }
  static AlgElem generator(FieldPtr f) {
    return AlgElem(std::move(f), {Rat(0), Rat(1)});
  }
  static AlgElem from_upoly(FieldPtr f, const UPoly& u) {
    return AlgElem(std::move(f), u.coeffs());
  }

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rat rational_value() const {
    if (!is_rational()) throw MathError("AlgElem: not rational");
    return c_.empty() ? Rat(0) : c_[0];
  }

  AlgElem operator-() const {
    AlgElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  AlgElem operator+(const AlgElem& o) const {
    auto [f, a, b] = align(*this, o);
    std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return AlgElem(f, std::move(r));
  }
  AlgElem operator-(const AlgElem& o) const { return *this + (-o); }
  AlgElem operator*(const AlgElem& o) const {
    auto [f, a, b] = align(*this, o);
    if (a.empty() || b.empty()) return AlgElem(f, {});
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return AlgElem(f, std::move(r));
  }
  AlgElem operator/(const AlgElem& o) const { return *this * o.inv(); }

  AlgElem inv() const {
    if (is_zero()) throw MathError("AlgElem: inverse of zero");
    if (!field_) return AlgElem(c_[0].inv());
    UPoly a(c_);
    auto [g, u, v] = xgcd(a, field_->modulus);
    if (g.deg() > 0)
      throw ZeroDivisorError("AlgElem: zero divisor, modulus splits", g);
    // g is the monic constant 1, so u*a = 1 mod modulus
    return AlgElem(field_, u.coeffs());
  }

  bool operator==(const AlgElem& o) const {
    if (field_ && o.field_ && field_ != o.field_ &&
        !(field_->modulus == o.field_->modulus))
      return false;
    return c_ == o.c_;
  }
  bool operator!=(const AlgElem& o) const { return !(*this == o); }

  std::string str() const {
    if (is_rational()) return rational_value().str();
    UPoly u(c_);
    return u.str(field_ ? field_->gen_name : "s");
  }

  const std::vector<Rat>& coeffs() const { return c_; }

 private:
  void reduce() {
    if (field_ && static_cast<int>(c_.size()) > field_->degree()) {
      UPoly r = UPoly(c_).divmod(field_->modulus).second;
      c_ = r.coeffs();
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.size() <= 1) {
      // keep the field tag only while it matters for printing the generator
    }
  }
  static std::tuple<FieldPtr, std::vector<Rat>, std::vector<Rat>> align(const AlgElem& x,
                                                                        const AlgElem& y) {
    FieldPtr f = x.field_ ? x.field_ : y.field_;
    if (x.field_ && y.field_ && x.field_ != y.field_ &&
        !(x.field_->modulus == y.field_->modulus))
      throw MathError("AlgElem: mixed extension fields");
    return {f, x.c_, y.c_};
  }

  FieldPtr field_;
  std::vector<Rat> c_;
};

using PolyE = Poly<AlgElem>;

inline PolyE embed(const PolyQ& p, const FieldPtr& f) {
  PolyE r(p.nvars());
  for (auto& [m, c] : p.terms()) r.add_term(m, AlgElem(f, {c}));
  return r;
}

}  // namespace cubinf
