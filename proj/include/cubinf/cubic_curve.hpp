#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubinf/affine.hpp"
#include "cubinf/field.hpp"
#include "cubinf/germ.hpp"
#include "cubinf/poly.hpp"

namespace cubinf {

struct UnsupportedExtensionError : MathError {
  UnsupportedExtensionError(std::string msg, UPoly mp)
      : MathError(std::move(msg)), minpoly(std::move(mp)) {}
  UPoly minpoly;
};

/// The nine projective equivalence classes of nonzero ternary cubics.
enum class CubicType {
  General,
  Nodal,
  Cuspidal,
  ConicTangent,
  ConicChord,
  ThreeLines,
  Triangle,
  DoubleLine,
  TripleLine,
};

const char* cubic_type_name(CubicType t);

/// Euler characteristic of the projective curve {f3 = 0} per type.
int chi_infinity(CubicType t);

/// The type's reference normal form (General carries lambda).
PolyQ cubic_normal_form(CubicType t, const Rat& lambda = Rat(1));

/// Exact projective point of P^2 with rational coordinates, stored as a
/// primitive integer vector whose first nonzero entry is positive.
struct P2Point {
  std::array<Rat, 3> x;

  static P2Point make(const Rat& a, const Rat& b, const Rat& c);
  int chart() const;  // index of first nonzero coordinate
  bool operator==(const P2Point& o) const { return x == o.x; }
  std::string str() const;
};

/// One point of a Galois-conjugate pair with coordinates in Q[s]/(minpoly).
struct P2PointExt {
  FieldPtr field;
  std::array<AlgElem, 3> x;
  int chart() const;
  std::string str() const;
};

struct CurvePoint {
  std::variant<P2Point, P2PointExt> coords;
  long mu = 0;  // curve Milnor number of f3 at the point

  bool is_rational() const { return std::holds_alternative<P2Point>(coords); }
  /// Number of geometric points this entry stands for (conjugates included).
  int multiplicity_in_count() const {
    if (is_rational()) return 1;
    return std::get<P2PointExt>(coords).field->degree();
  }
  std::string str() const {
    return is_rational() ? std::get<P2Point>(coords).str() : std::get<P2PointExt>(coords).str();
  }
};

struct CurveSingularLocus {
  int dimension = -1;  // -1 empty, else 0 or 1
  std::vector<CurvePoint> points;
  long total_mu = 0;       // sum of curve Milnor numbers (dimension 0 only)
  long distinct_count = 0; // geometric point count (dimension 0 only)
  bool points_complete = true;
  std::optional<UPoly> blocking_minpoly;  // set when points_complete is false
};

/// Singular locus of a nonzero homogeneous cubic, with exact points over Q or
/// quadratic extensions. Throws UnsupportedExtension when a point needs a
/// bigger field; the lenient variant records the obstruction instead.
CurveSingularLocus singular_locus(const PolyQ& f3);
CurveSingularLocus singular_locus_lenient(const PolyQ& f3);

CubicType classify_cubic(const PolyQ& f3);

struct NormalizingMap {
  bool available = false;
  AffineMap map;                // substitute_affine(f3, map) == normal form
  std::optional<Rat> lambda;    // General family parameter
  std::string reason;           // when unavailable
};

NormalizingMap normalizing_map(const PolyQ& f3);

/// f = l * q exactly for a degree-1 l; nullopt if not divisible.
std::optional<PolyQ> divide_by_linear(const PolyQ& f, const PolyQ& l);

/// Split a ternary quadratic into two rational linear forms if possible.
std::optional<std::pair<PolyQ, PolyQ>> split_rational_conic(const PolyQ& q);

/// f3 == c * L^3 for a rational linear form L.
std::optional<std::pair<Rat, PolyQ>> match_linear_cube(const PolyQ& f3);

/// f3 == L^2 * M with L not proportional to M (both rational).
struct SquareLineSplit {
  PolyQ line_sq;   // L
  PolyQ cofactor;  // M, f3 = L^2 * M
};
std::optional<SquareLineSplit> match_square_line(const PolyQ& f3);

/// Curve Milnor number of f3 at one singular point (in its affine chart).
long curve_milnor_at(const PolyQ& f3, const CurvePoint& p);

/// Square root inside a quadratic field, when it exists there.
std::optional<AlgElem> sqrt_in_field(const FieldPtr& f, const AlgElem& alpha);

}  // namespace cubinf
