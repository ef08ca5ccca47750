#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubinf/groebner.hpp"
#include "cubinf/linalg.hpp"
#include "cubinf/poly.hpp"

namespace cubinf {

struct InternalError : MathError {
  using MathError::MathError;
};

/// Simple singularity class of a function germ. A(0) is a smooth point.
struct LocalType {
  enum class Kind { A, D, E, NonIsolated, NonSimple };
  Kind kind = Kind::A;
  int index = 0;

  static LocalType A(int k) { return {Kind::A, k}; }
  static LocalType D(int k) { return {Kind::D, k}; }
  static LocalType E(int k) { return {Kind::E, k}; }
  static LocalType non_isolated() { return {Kind::NonIsolated, 0}; }
  static LocalType non_simple() { return {Kind::NonSimple, 0}; }

  bool is_isolated() const { return kind != Kind::NonIsolated; }
  /// Milnor number; -1 for NonIsolated/NonSimple tags.
  long milnor() const {
    switch (kind) {
      case Kind::A:
      case Kind::D:
      case Kind::E: return index;
      default: return -1;
    }
  }
  std::string str() const {
    switch (kind) {
      case Kind::A: return "A" + std::to_string(index);
      case Kind::D: return "D" + std::to_string(index);
      case Kind::E: return "E" + std::to_string(index);
      case Kind::NonIsolated: return "oo";
      case Kind::NonSimple: return "NonSimple";
    }
    return "?";
  }
  static std::optional<LocalType> parse(const std::string& s);

  bool operator==(const LocalType& o) const { return kind == o.kind && index == o.index; }
  bool operator!=(const LocalType& o) const { return !(*this == o); }
  bool operator<(const LocalType& o) const {
    return kind != o.kind ? kind < o.kind : index < o.index;
  }
};

inline std::optional<LocalType> LocalType::parse(const std::string& s) {
  if (s == "oo" || s == "inf") return LocalType::non_isolated();
  if (s == "NonSimple") return LocalType::non_simple();
  if (s.size() < 2) return std::nullopt;
  int k;
  try {
    k = std::stoi(s.substr(1));
  } catch (...) {
    return std::nullopt;
  }
  switch (s[0]) {
    case 'A': return LocalType::A(k);
    case 'D': return LocalType::D(k);
    case 'E': return LocalType::E(k);
    default: return std::nullopt;
  }
}

struct GermAnalysis {
  std::optional<long> milnor;  // nullopt = non-isolated
  int corank = 0;
  std::optional<CubicRootStructure> residual;  // present iff corank == 2
  LocalType recognized;
};

inline constexpr int kDefaultJetOrder = 16;

namespace germ_detail {

// x^a monomials of total degree exactly d.
inline std::vector<Mono> monomials_of_degree(int nvars, int d) {
  std::vector<Mono> out;
  Mono m(nvars);
  std::function<void(int, int)> walk = [&](int i, int left) {
    if (i == nvars - 1) {
      m.e[i] = left;
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.e[i] = e;
      walk(i + 1, left - e);
    }
  };
  if (nvars > 0) walk(0, d);
  return out;
}

// Leading monomials of a Groebner basis of <gens> + m^cap, truncated at cap.
template <class K>
std::vector<Mono> truncated_jacobian_staircase(const std::vector<Poly<K>>& gens, int nvars,
                                               int cap) {
  std::vector<Poly<K>> all = gens;
  for (auto& m : monomials_of_degree(nvars, cap))
    all.push_back(Poly<K>::monomial(m, K(1)));
  MonomialOrder ord = MonomialOrder::grevlex();
  auto gbasis = groebner(std::span<const Poly<K>>(all), ord, cap + 1);
  return leading_monomials<K>(std::span<const Poly<K>>(gbasis), ord);
}

}  // namespace germ_detail

struct MilnorResult {
  bool isolated = true;
  long mu = 0;  // meaningful when isolated
};

/// Milnor number of f at an (arbitrary) point: the stabilized dimension of
/// K[x]/(Jf + m^N) for growing N. If the dimensions still grow at N = nmax
/// the germ is reported non-isolated, corroborated by an unbounded global
/// Jacobian staircase.
template <class K>
MilnorResult local_milnor(const Poly<K>& f, std::span<const K> pt, int nmax = kDefaultJetOrder) {
  const int n = f.nvars();
  Poly<K> g = f.translate(pt);
  std::vector<Poly<K>> jac = g.gradient();
  int cap = nmax + 1;
  auto lms = germ_detail::truncated_jacobian_staircase(jac, n, cap);
  auto dims = staircase_dims_by_cutoff(std::span<const Mono>(lms), n, cap);
  for (int N = 1; N <= nmax; ++N) {
    if (dims[N] == dims[N + 1]) return {true, dims[N]};
  }
  // No stabilization: require the global singular locus through the point to
  // be positive-dimensional, otherwise the jet order was genuinely too small.
  auto qd = quotient_dim(std::span<const Poly<K>>(jac));
  if (qd.has_value())
    throw InternalError("local_milnor: no stabilization at jet order " + std::to_string(nmax) +
                        " but the Jacobian staircase is finite");
  return {false, -1};
}

template <class K>
Mat<K> hessian_at(const Poly<K>& f, std::span<const K> pt) {
  const int n = f.nvars();
  Mat<K> h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      K v = f.derivative(i).derivative(j).eval(pt);
      h.a[i][j] = v;
      h.a[j][i] = v;
    }
  return h;
}

template <class K>
int hessian_rank_at(const Poly<K>& f, std::span<const K> pt) {
  return hessian_at(f, pt).rank();
}

template <class K>
int corank_at(const Poly<K>& f, std::span<const K> pt) {
  return f.nvars() - hessian_rank_at(f, pt);
}

/// Degree-3 part of the translated germ restricted to the 2-dimensional
/// kernel of its Hessian (the splitting-lemma residual), as a root pattern.
template <class K>
CubicRootStructure residual_cubic(const Poly<K>& f, std::span<const K> pt) {
  if (corank_at(f, pt) != 2) throw MathError("residual_cubic: corank is not 2");
  Poly<K> g = f.translate(pt);
  auto ker = hessian_at(f, pt).kernel_basis();
  Poly<K> cubic = g.degree_part(3);
  // restrict to u*v1 + v*v2
  std::vector<Poly<K>> images;
  for (int i = 0; i < f.nvars(); ++i) {
    Poly<K> im(2);
    im.add_term(Mono({1, 0}), ker[0][i]);
    im.add_term(Mono({0, 1}), ker[1][i]);
    images.push_back(im);
  }
  return binary_cubic_root_structure(cubic.substitute(images));
}

/// Recognize the singularity type of f at a point of a 3-variable germ from
/// (Milnor number, corank, residual binary cubic).
template <class K>
GermAnalysis ade_classify(const Poly<K>& f, std::span<const K> pt,
                          int nmax = kDefaultJetOrder) {
  if (f.nvars() != 3) throw ContextError("ade_classify: need a 3-variable germ");
  GermAnalysis out;
  for (auto& d : f.gradient()) {
    if (!d.eval(pt).is_zero()) {  // smooth point
      out.milnor = 0;
      out.recognized = LocalType::A(0);
      return out;
    }
  }
  MilnorResult mr = local_milnor(f, pt, nmax);
  out.corank = corank_at(f, pt);
  if (!mr.isolated) {
    out.milnor = std::nullopt;
    if (out.corank == 2) out.residual = residual_cubic(f, pt);
    out.recognized = LocalType::non_isolated();
    return out;
  }
  out.milnor = mr.mu;
  if (mr.mu == 0) {
    out.recognized = LocalType::A(0);
    return out;
  }
  switch (out.corank) {
    case 0:
      if (mr.mu != 1) throw InternalError("ade_classify: corank 0 with mu != 1");
      out.recognized = LocalType::A(1);
      return out;
    case 1:
      out.recognized = LocalType::A(static_cast<int>(mr.mu));
      return out;
    case 2: {
      out.residual = residual_cubic(f, pt);
      switch (*out.residual) {
        case CubicRootStructure::ThreeDistinct:
          if (mr.mu != 4) throw InternalError("ade_classify: ThreeDistinct residual with mu != 4");
          out.recognized = LocalType::D(4);
          return out;
        case CubicRootStructure::DoubleSimple:
          if (mr.mu < 5) throw InternalError("ade_classify: DoubleSimple residual with mu < 5");
          out.recognized = LocalType::D(static_cast<int>(mr.mu));
          return out;
        case CubicRootStructure::Triple:
          if (mr.mu >= 6 && mr.mu <= 8) {
            out.recognized = LocalType::E(static_cast<int>(mr.mu));
            return out;
          }
          out.recognized = LocalType::non_simple();
          return out;
        case CubicRootStructure::Zero:
          out.recognized = LocalType::non_simple();
          return out;
      }
      break;
    }
    default:
      out.recognized = LocalType::non_simple();
      return out;
  }
  throw InternalError("ade_classify: unreachable");
}

/// Milnor number of a plane-curve germ (2-variable quotient algorithm).
template <class K>
MilnorResult curve_local_milnor(const Poly<K>& g, std::span<const K> pt,
                                int nmax = kDefaultJetOrder) {
  if (g.nvars() != 2) throw ContextError("curve_local_milnor: need 2 variables");
  return local_milnor(g, pt, nmax);
}

enum class QHClass { Quasihomogeneous, SemiQuasihomogeneous, Neither };

/// Weighted-homogeneity of a germ at the origin with respect to positive
/// integer weights: exact weight d on every term, or semi (no term below d
/// and the weight-d part has an isolated singularity), or neither.
template <class K>
QHClass quasihomogeneous_check(const Poly<K>& f, std::span<const int> weights, int d) {
  for (int w : weights)
    if (w <= 0) throw MathError("quasihomogeneous_check: weights must be positive");
  bool all_exact = true, none_below = true;
  Poly<K> wpart(f.nvars());
  for (auto& [m, c] : f.terms()) {
    long w = 0;
    for (int i = 0; i < f.nvars(); ++i) w += static_cast<long>(m.e[i]) * weights[i];
    if (w != d) all_exact = false;
    if (w < d) none_below = false;
    if (w == d) wpart.add_term(m, c);
  }
  if (all_exact && !f.is_zero()) return QHClass::Quasihomogeneous;
  if (!none_below || wpart.is_zero()) return QHClass::Neither;
  std::vector<K> origin(f.nvars(), K());
  MilnorResult mr = local_milnor(wpart, origin);
  return mr.isolated && mr.mu > 0 ? QHClass::SemiQuasihomogeneous : QHClass::Neither;
}

}  // namespace cubinf
