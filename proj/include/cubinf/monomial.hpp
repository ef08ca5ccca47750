#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace cubinf {

/// Exponent vector; length equals the ambient variable count.
struct Mono {
  std::vector<int> e;

  Mono() = default;
  explicit Mono(int nvars) : e(nvars, 0) {}
  explicit Mono(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const { return deg() == 0; }

  bool divides(const Mono& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Mono operator*(const Mono& m) const {
    Mono r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }
  /// Quotient; caller guarantees divisibility.
  Mono operator/(const Mono& m) const {
    Mono r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
  }
  static Mono lcm(const Mono& a, const Mono& b) {
    Mono r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static bool coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }

  // Canonical storage order (arbitrary total order, not a monomial order).
  bool operator<(const Mono& m) const { return e < m.e; }
  bool operator==(const Mono& m) const { return e == m.e; }
};

/// Total order on monomials compatible with multiplication.
/// Grevlex refines total degree; Block(k) eliminates the first k variables
/// (grevlex within each block, first block dominant).
struct MonomialOrder {
  enum class Kind { Grevlex, Block } kind = Kind::Grevlex;
  int split = 0;  // Block: variables [0, split) are eliminated

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder block_eliminate(int first_k) { return {Kind::Block, first_k}; }

  // grevlex on index range [lo, hi): returns <0, 0, >0 like a comparator.
  static int cmp_grevlex_range(const Mono& a, const Mono& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
  }

  // <0 if a < b, 0 if equal, >0 if a > b.
  int cmp(const Mono& a, const Mono& b) const {
    const int n = a.nvars();
    if (kind == Kind::Grevlex) return cmp_grevlex_range(a, b, 0, n);
    int c = cmp_grevlex_range(a, b, 0, split);
    if (c != 0) return c;
    return cmp_grevlex_range(a, b, split, n);
  }
  bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }
};

inline std::string default_var_name(int i) { return "x" + std::to_string(i); }

inline std::string mono_str(const Mono& m, const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.empty() ? default_var_name(i) : names[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace cubinf
