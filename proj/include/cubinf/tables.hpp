#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubinf/affine.hpp"
#include "cubinf/cubic_curve.hpp"
#include "cubinf/germ.hpp"
#include "cubinf/univariate.hpp"

namespace cubinf {

/// The degree-2 part of f2(x0,0,x2) vanished identically: the input is not in
/// the class the boundary tables cover.
struct NotBTypeSignal : MathError {
  using MathError::MathError;
};

struct IncompleteTableError : MathError {
  IncompleteTableError(std::string msg, std::array<Rat, 9> a)
      : MathError(std::move(msg)), coeffs(std::move(a)) {}
  std::array<Rat, 9> coeffs;
};

enum class ClassTag { F, BminusF, NotB };

inline const char* class_tag_name(ClassTag c) {
  switch (c) {
    case ClassTag::F: return "F";
    case ClassTag::BminusF: return "B-minus-F";
    case ClassTag::NotB: return "not-B";
  }
  return "?";
}

/// Point of the plane at infinity {x3 = 0}, with (x0:x1:x2) coordinates.
using InfPoint = std::variant<P2Point, P2PointExt>;

std::string inf_point_str(const InfPoint& p);

/// f in reduced coordinates: the cubic part is the type's normal form and the
/// type's designated quadratic monomials vanish. Coefficients follow
/// f1 = a0 x0 + a1 x1 + a2 x2,
/// f2 = a3 x0^2 + a4 x0 x1 + a5 x0 x2 + a6 x1^2 + a7 x1 x2 + a8 x2^2.
struct ReducedForm {
  PolyQ f_reduced;       // f1 + f2 + f3 in reduced coordinates (constant stripped)
  std::array<Rat, 9> a;  // a0..a8
  Rat constant;          // constant term produced by the reduction
  AffineMap applied;     // substitute_affine(f_original, applied) = f_reduced + constant
  CubicType cubic_type;
  std::vector<std::string> notes;
};

ReducedForm reduce_coefficients(const PolyQ& f, CubicType ct, const AffineMap& nm);

/// Singular points of the compactified fibers at infinity, per the reduced
/// coefficients. Empty when every fiber is smooth along {x3 = 0}.
std::vector<InfPoint> infinity_points(const ReducedForm& rf);

struct PointVerdict {
  InfPoint pt;
  LocalType generic;
  long mu_inf = 0;  // curve Milnor number of f3 at the point (F classes)
};

struct JumpEvent {
  int point_index;      // into Verdict::points
  UPoly t_locus;        // monic irreducible over Q (roots are special values)
  LocalType generic;
  LocalType special;    // NonIsolated allowed
  long jump_per_root;   // mu(special) - mu(generic); 0 when special is NonIsolated
};

struct Verdict {
  ClassTag cls = ClassTag::F;
  CubicType cubic_type = CubicType::General;
  int table_id = 0;  // 1..8; 0 = smooth at infinity / untabulated
  std::string row_label;
  std::vector<PointVerdict> points;
  std::vector<JumpEvent> events;
  long lambda_total = 0;
  std::optional<long> mu, b2;
  bool non_isolated = false;
  std::vector<std::string> findings;
};

/// Evaluate the encoded tables on a reduced form.
Verdict table_classify(const ReducedForm& rf);

/// One encoded table row; conditions are polynomials in a0..a8 (and t for the
/// jump locus), evaluated exactly.
struct TableRow {
  int table_id = 0;
  std::string label;
  std::vector<std::string> zero_conds, nonzero_conds;
  std::vector<std::string> point_types;  // per slot, "A2->A3", "A0", "A5->oo", "-"
  std::optional<long> lambda, mu, b2;
  bool lambda_star = false;
  std::string t_locus;  // "" when no jump
  std::string note;
};

const std::vector<TableRow>& encoded_tables();

/// The embedded, versioned table data file (dumped verbatim by the CLI).
std::string tables_data_text();

}  // namespace cubinf
