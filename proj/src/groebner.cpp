#include "cubinf/groebner.hpp"

#include <functional>

namespace cubinf {

std::optional<long> staircase_count(std::span<const Mono> lms, int nvars) {
  for (auto& l : lms)
    if (l.is_one()) return 0;
  // Finite iff every variable has a pure power among the leading monomials.
  std::vector<int> bound(nvars, -1);
  for (auto& l : lms) {
    int var = -1;
    bool pure = true;
    for (int i = 0; i < nvars; ++i) {
      if (l.e[i] == 0) continue;
      if (var >= 0) { pure = false; break; }
      var = i;
    }
    if (pure && var >= 0 && (bound[var] < 0 || l.e[var] < bound[var])) bound[var] = l.e[var];
  }
  for (int i = 0; i < nvars; ++i)
    if (bound[i] < 0) return std::nullopt;

  long count = 0;
  Mono m(nvars);
  std::function<void(int)> walk = [&](int i) {
    if (i == nvars) {
      if (!divisible_by_any(m, lms)) ++count;
      return;
    }
    for (int e = 0; e < bound[i]; ++e) {
      m.e[i] = e;
      walk(i + 1);
    }
    m.e[i] = 0;
  };
  walk(0);
  return count;
}

int staircase_krull_dim(std::span<const Mono> lms, int nvars) {
  for (auto& l : lms)
    if (l.is_one()) return -1;
  int best = 0;
  for (int mask = 1; mask < (1 << nvars); ++mask) {
    bool ok = true;
    for (auto& l : lms) {
      bool inside = true;
      for (int i = 0; i < nvars && inside; ++i)
        if (l.e[i] > 0 && !(mask & (1 << i))) inside = false;
      if (inside) { ok = false; break; }
    }
    if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
  }
  return best;
}

std::vector<long> staircase_dims_by_cutoff(std::span<const Mono> lms, int nvars, int cap) {
  // alive[d] = number of standard monomials of degree d (d < cap)
  std::vector<long> alive(cap, 0);
  Mono m(nvars);
  std::function<void(int, int)> walk = [&](int i, int deg) {
    if (i == nvars) {
      if (!divisible_by_any(m, lms)) ++alive[deg];
      return;
    }
    for (int e = 0; deg + e < cap; ++e) {
      m.e[i] = e;
      walk(i + 1, deg + e);
    }
    m.e[i] = 0;
  };
  walk(0, 0);
  std::vector<long> dims(cap + 1, 0);
  for (int n = 1; n <= cap; ++n) dims[n] = dims[n - 1] + alive[n - 1];
  return dims;  // dims[N] = dim of quotient by (I + m^N)
}

}  // namespace cubinf
