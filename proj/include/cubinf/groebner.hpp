#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "cubinf/field.hpp"
#include "cubinf/poly.hpp"

namespace cubinf {

namespace gb_detail {

template <class K>
struct Term {
  Mono m;
  K c;
};

// Terms sorted descending under the active order.
template <class K>
using Rep = std::vector<Term<K>>;

inline void normalize_coeffs(std::vector<Term<Rat>>& t) {
  if (t.empty()) return;
  mpz_class g = 0, l = 1;
  for (auto& x : t) {
    g = gcd_z(g, x.c.num());
    l = lcm_z(l, x.c.den());
  }
  Rat s(l, g);
  if ((t.front().c * s).sign() < 0) s = -s;
  for (auto& x : t) x.c *= s;
}

inline void normalize_coeffs(std::vector<Term<AlgElem>>& t) {
  if (t.empty()) return;
  AlgElem inv = t.front().c.inv();
  for (auto& x : t) x.c = x.c * inv;
}

template <class K>
Rep<K> to_rep(const Poly<K>& p, const MonomialOrder& ord, int truncate) {
  Rep<K> r;
  r.reserve(p.term_count());
  for (auto& [m, c] : p.terms()) {
    if (truncate >= 0 && m.deg() >= truncate) continue;
    r.push_back({m, c});
  }
  std::sort(r.begin(), r.end(),
            [&](const Term<K>& a, const Term<K>& b) { return ord.cmp(a.m, b.m) > 0; });
  return r;
}

template <class K>
Poly<K> from_rep(const Rep<K>& r, int nvars) {
  Poly<K> p(nvars);
  for (auto& t : r) p.add_term(t.m, t.c);
  return p;
}

// p -= c * x^shift * g, merging sorted term lists.
template <class K>
Rep<K> axpy(const Rep<K>& p, const K& c, const Mono& shift, const Rep<K>& g,
            const MonomialOrder& ord, int truncate) {
  Rep<K> out;
  out.reserve(p.size() + g.size());
  size_t i = 0, j = 0;
  while (i < p.size() || j < g.size()) {
    Mono gm;
    if (j < g.size()) gm = g[j].m * shift;
    if (j < g.size() && truncate >= 0 && gm.deg() >= truncate) {
      ++j;
      continue;
    }
    if (j == g.size() || (i < p.size() && ord.cmp(p[i].m, gm) > 0)) {
      out.push_back(p[i++]);
    } else if (i == p.size() || ord.cmp(p[i].m, gm) < 0) {
      out.push_back({gm, -(c * g[j].c)});
      ++j;
    } else {
      K v = p[i].c - c * g[j].c;
      if (!v.is_zero()) out.push_back({p[i].m, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full normal form of p against basis (top and tail reduction).
template <class K>
Rep<K> normal_form_rep(Rep<K> p, const std::vector<Rep<K>>& basis, const MonomialOrder& ord,
                       int truncate) {
  Rep<K> rem;
  while (!p.empty()) {
    const Mono& lt = p.front().m;
    if (truncate >= 0 && lt.deg() >= truncate) {
      p.erase(p.begin());
      continue;
    }
    bool reduced = false;
    for (auto& g : basis) {
      if (g.empty() || !g.front().m.divides(lt)) continue;
      K f = p.front().c / g.front().c;
      p = axpy(p, f, lt / g.front().m, g, ord, truncate);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return rem;
}

template <class K>
Rep<K> spoly(const Rep<K>& f, const Rep<K>& g, const MonomialOrder& ord, int truncate) {
  Mono l = Mono::lcm(f.front().m, g.front().m);
  // cross-multiplied: c_g * (l/lm f) * f - c_f * (l/lm g) * g
  Rep<K> a;
  a.reserve(f.size());
  Mono sf = l / f.front().m;
  for (auto& t : f) {
    Mono m = t.m * sf;
    if (truncate >= 0 && m.deg() >= truncate) continue;
    a.push_back({m, t.c * g.front().c});
  }
  return axpy(a, f.front().c, l / g.front().m, g, ord, truncate);
}

}  // namespace gb_detail

/// Reduced Groebner basis by Buchberger's algorithm, normal pair-selection
/// strategy (smallest lcm first), deterministic output. `truncate >= 0`
/// computes modulo all monomials of degree >= truncate, which must then be
/// supplied by the caller among the generators when the ideal needs them.
template <class K>
std::vector<Poly<K>> groebner(std::span<const Poly<K>> gens, const MonomialOrder& ord,
                              int truncate = -1) {
  using namespace gb_detail;
  int nvars = 0;
  std::vector<Rep<K>> basis;
  for (auto& g : gens) {
    nvars = g.nvars();
    Rep<K> r = to_rep(g, ord, truncate);
    if (r.empty()) continue;
    normalize_coeffs(r);
    basis.push_back(std::move(r));
  }

  struct Pair {
    size_t i, j;
    Mono lcm;
  };
  std::vector<Pair> pairs;
  auto consider = [&](size_t i, size_t j) {
    const auto& f = basis[i];
    const auto& g = basis[j];
    if (f.size() == 1 && g.size() == 1) return;              // S-poly of monomials is 0
    if (Mono::coprime(f.front().m, g.front().m)) return;     // Buchberger's first criterion
    pairs.push_back({i, j, Mono::lcm(f.front().m, g.front().m)});
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) consider(i, j);

  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      int c = ord.cmp(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                               (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
        best = k;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);
    Rep<K> s = spoly(basis[pr.i], basis[pr.j], ord, truncate);
    Rep<K> h = normal_form_rep(std::move(s), basis, ord, truncate);
    if (h.empty()) continue;
    normalize_coeffs(h);
    basis.push_back(std::move(h));
    for (size_t i = 0; i + 1 < basis.size(); ++i) consider(i, basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (basis[j].front().m.divides(basis[i].front().m) &&
          !(basis[i].front().m == basis[j].front().m && j > i))
        keep[i] = false;
    }
  std::vector<Rep<K>> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Tail-reduce each element against the others.
  std::vector<Rep<K>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Rep<K>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Rep<K> h = normal_form_rep(minimal[i], others, ord, truncate);
    if (h.empty()) continue;
    normalize_coeffs(h);
    reduced.push_back(std::move(h));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Rep<K>& a, const Rep<K>& b) {
    return ord.cmp(a.front().m, b.front().m) < 0;
  });

  std::vector<Poly<K>> out;
  out.reserve(reduced.size());
  for (auto& r : reduced) out.push_back(from_rep(r, nvars));
  return out;
}

/// Normal form of p modulo a (Groebner) basis.
template <class K>
Poly<K> normal_form(const Poly<K>& p, std::span<const Poly<K>> basis, const MonomialOrder& ord,
                    int truncate = -1) {
  using namespace gb_detail;
  std::vector<Rep<K>> b;
  for (auto& g : basis) {
    Rep<K> r = to_rep(g, ord, truncate);
    if (!r.empty()) b.push_back(std::move(r));
  }
  return from_rep(normal_form_rep(to_rep(p, ord, truncate), b, ord, truncate), p.nvars());
}

/// Leading monomials of a basis under ord.
template <class K>
std::vector<Mono> leading_monomials(std::span<const Poly<K>> basis, const MonomialOrder& ord) {
  std::vector<Mono> lms;
  for (auto& g : basis)
    if (auto lt = g.leading_term(ord)) lms.push_back(lt->first);
  return lms;
}

inline bool divisible_by_any(const Mono& m, std::span<const Mono> lms) {
  for (auto& l : lms)
    if (l.divides(m)) return true;
  return false;
}

/// Number of standard monomials of a zero-dimensional staircase; nullopt when
/// the staircase is unbounded (quotient is infinite-dimensional).
std::optional<long> staircase_count(std::span<const Mono> lms, int nvars);

/// Krull dimension of the monomial quotient: largest variable subset S such
/// that no leading monomial is supported inside S. Returns -1 for the unit
/// ideal.
int staircase_krull_dim(std::span<const Mono> lms, int nvars);

/// dim_Q Q[x]/(I + m^N) for every N in [1, cap], given leading monomials of a
/// Groebner basis of I + m^cap (computed with truncate = cap).
std::vector<long> staircase_dims_by_cutoff(std::span<const Mono> lms, int nvars, int cap);

/// Vector-space dimension of K[x]/<gens> (grevlex staircase count).
template <class K>
std::optional<long> quotient_dim(std::span<const Poly<K>> gens) {
  MonomialOrder ord = MonomialOrder::grevlex();
  auto gb = groebner(gens, ord);
  int nvars = gens.empty() ? 0 : gens[0].nvars();
  auto lms = leading_monomials<K>(gb, ord);
  return staircase_count(lms, nvars);
}

/// Generators of the elimination ideal: drop the first `drop_k` variables
/// (the kept variables are a suffix block of the order).
template <class K>
std::vector<Poly<K>> eliminate(std::span<const Poly<K>> gens, int drop_k) {
  MonomialOrder ord = MonomialOrder::block_eliminate(drop_k);
  auto gb = groebner(gens, ord);
  std::vector<Poly<K>> kept;
  for (auto& g : gb) {
    bool pure = true;
    for (int i = 0; i < drop_k && pure; ++i)
      if (g.degree_in(i) > 0) pure = false;
    if (pure) kept.push_back(g);
  }
  return kept;
}

}  // namespace cubinf
