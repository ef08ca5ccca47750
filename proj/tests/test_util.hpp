#pragma once

#include <cstdint>
#include <vector>

#include "cubinf/affine.hpp"
#include "cubinf/linalg.hpp"
#include "cubinf/poly.hpp"

namespace cubinf::testutil {

// deterministic cross-platform generator for property tests
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % uint64_t(hi - lo + 1)); }
  Rat rat(long max_num = 6, long max_den = 3) {
    return Rat(range(-max_num, max_num), range(1, max_den));
  }
  Rat nonzero_rat(long max_num = 6, long max_den = 3) {
    for (;;) {
      Rat r = rat(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  PolyQ poly(int nvars, int max_deg, int terms, long max_num = 5) {
    PolyQ p(nvars);
    for (int i = 0; i < terms; ++i) {
      Mono m(nvars);
      int left = max_deg;
      for (int v = 0; v < nvars; ++v) {
        int e = static_cast<int>(range(0, left));
        m.e[v] = e;
        left -= e;
      }
      p.add_term(m, rat(max_num));
    }
    return p;
  }

  // invertible with small entries: product of a unit lower and unit upper
  MatQ gl3() {
    MatQ l = MatQ::identity(3), u = MatQ::identity(3);
    l.a[1][0] = rat(2, 1);
    l.a[2][0] = rat(2, 1);
    l.a[2][1] = rat(2, 1);
    u.a[0][1] = rat(2, 1);
    u.a[0][2] = rat(2, 1);
    u.a[1][2] = rat(2, 1);
    u.a[0][0] = nonzero_rat(2, 1);
    u.a[1][1] = nonzero_rat(2, 1);
    u.a[2][2] = nonzero_rat(2, 1);
    return l * u;
  }

  AffineMap affine() {
    return AffineMap(gl3(), {rat(3, 2), rat(3, 2), rat(3, 2)}, nonzero_rat(3, 2));
  }
};

}  // namespace cubinf::testutil
