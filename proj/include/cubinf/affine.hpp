#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubinf/linalg.hpp"
#include "cubinf/poly.hpp"

namespace cubinf {

struct InvalidMapError : MathError {
  using MathError::MathError;
};

/// Affine source change T(x) = M x + c with invertible M, plus a nonzero
/// scaling L of the codomain. Acting on a polynomial: p |-> L * (p o T^{-1}).
class AffineMap {
 public:
  AffineMap() : m_(MatQ::identity(3)), c_(3, Rat(0)), scale_(1) {}
  AffineMap(MatQ m, std::vector<Rat> c, Rat scale)
      : m_(std::move(m)), c_(std::move(c)), scale_(scale) {
    if (m_.rows != 3 || m_.cols != 3 || c_.size() != 3)
      throw InvalidMapError("AffineMap: need 3x3 linear part and length-3 translation");
    if (m_.det().is_zero()) throw InvalidMapError("AffineMap: singular linear part");
    if (scale_.is_zero()) throw InvalidMapError("AffineMap: zero codomain scale");
  }

  static AffineMap identity() { return AffineMap(); }
  static AffineMap translation(const std::vector<Rat>& c) {
    return AffineMap(MatQ::identity(3), c, Rat(1));
  }
  static AffineMap linear(MatQ m) { return AffineMap(std::move(m), {Rat(0), Rat(0), Rat(0)}, Rat(1)); }
  static AffineMap scaling(const Rat& l) {
    return AffineMap(MatQ::identity(3), {Rat(0), Rat(0), Rat(0)}, l);
  }
  /// Build from the inverse linear part directly: T^{-1}(x) = Minv x + d.
  static AffineMap from_inverse(const MatQ& minv, const std::vector<Rat>& d, const Rat& l) {
    auto m = minv.inverse();
    if (!m) throw InvalidMapError("AffineMap: singular linear part");
    // T(x) = Minv^{-1}(x - d)
    std::vector<Rat> c = m->apply(d);
    for (auto& x : c) x = -x;
    return AffineMap(*m, c, l);
  }

  const MatQ& linear_part() const { return m_; }
  const std::vector<Rat>& translation_part() const { return c_; }
  const Rat& codomain_scale() const { return scale_; }

  /// this o other (apply `other` first).
  AffineMap compose(const AffineMap& other) const {
    MatQ m = m_ * other.m_;
    std::vector<Rat> c = m_.apply(other.c_);
    for (int i = 0; i < 3; ++i) c[i] += c_[i];
    return AffineMap(m, c, scale_ * other.scale_);
  }

  AffineMap inverse() const {
    MatQ minv = *m_.inverse();
    std::vector<Rat> c = minv.apply(c_);
    for (auto& x : c) x = -x;
    return AffineMap(minv, c, scale_.inv());
  }

  /// Images of the source variables under T^{-1}, as degree-1 polynomials.
  std::vector<PolyQ> inverse_variable_images() const {
    MatQ minv = *m_.inverse();
    std::vector<PolyQ> images;
    for (int i = 0; i < 3; ++i) {
      PolyQ p(3);
      for (int j = 0; j < 3; ++j) {
        if (!minv.a[i][j].is_zero()) p.add_term(Mono({j == 0, j == 1, j == 2}), minv.a[i][j]);
      }
      Rat k(0);
      for (int j = 0; j < 3; ++j) k -= minv.a[i][j] * c_[j];
      p.add_term(Mono(3), k);
      images.push_back(p);
    }
    return images;
  }

 private:
  MatQ m_;
  std::vector<Rat> c_;
  Rat scale_;
};

/// L * p(T^{-1}(x)) for p in three variables.
inline PolyQ substitute_affine(const PolyQ& p, const AffineMap& m) {
  if (p.nvars() != 3) throw ContextError("substitute_affine: need 3 variables");
  auto images = m.inverse_variable_images();
  return p.substitute(images) * m.codomain_scale();
}

}  // namespace cubinf
