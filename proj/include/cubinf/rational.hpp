#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cubinf {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number. Always reduced, denominator > 0, zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, literals are everywhere
  Rat(const mpz_class& n) : v_(n) {}
  Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}
  Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw MathError("Rat: zero denominator");
    v_.canonicalize();
  }

  static Rat parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw MathError("Rat: division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  Rat inv() const {
    if (is_zero()) throw MathError("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  Rat pow(unsigned k) const {
    Rat r(1), b = *this;
    for (; k; k >>= 1, b *= b)
      if (k & 1) r *= b;
    return r;
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  /// Exact square root if this is the square of a rational, else nullopt.
  std::optional<Rat> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(rn, rd);
  }

  /// Exact cube root if this is the cube of a rational, else nullopt.
  std::optional<Rat> cbrt_exact() const {
    mpz_class n = num(), d = den(), rn, rd;
    int en = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3);
    int ed = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3);
    if (!en || !ed) return std::nullopt;
    return Rat(rn, rd);
  }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  double to_double() const { return v_.get_d(); }

 private:
  explicit Rat(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

inline Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(s), mpz_class(1));
    return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw MathError("Rat: cannot parse '" + s + "'");
  }
}

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace cubinf
