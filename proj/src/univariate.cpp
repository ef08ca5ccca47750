#include "cubinf/univariate.hpp"

namespace cubinf {

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  // n != 0; plain trial division, inputs here are small table data
  std::vector<mpz_class> divs;
  mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divs.push_back(d);
      if (d * d != a) divs.push_back(a / d);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& g) {
  std::vector<Rat> roots;
  if (g.is_zero() || g.deg() == 0) return roots;
  UPoly p = squarefree_part(g).primitive();
  // strip the root at zero
  if (p[0].is_zero()) {
    roots.push_back(Rat(0));
    std::vector<Rat> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = UPoly(std::move(c));
  }
  if (p.deg() < 1) return roots;
  if (p.deg() == 1) {
    roots.push_back(-p[0] / p[1]);
    return roots;
  }
  // candidates num/den with num | p(0), den | lead(p)
  for (auto& nu : positive_divisors(p[0].num()))
    for (auto& de : positive_divisors(p.lead().num())) {
      for (int s : {1, -1}) {
        Rat cand(s * nu, de);
        if (p.eval_rat(cand).is_zero()) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UFactorization factor_squarefree(const UPoly& g) {
  UFactorization out;
  if (g.is_zero() || g.deg() == 0) return out;
  UPoly p = squarefree_part(g).monic();
  for (auto& r : rational_roots(p)) {
    out.factors.push_back(UPoly({-r, Rat(1)}));
    p = p.divmod(UPoly({-r, Rat(1)})).first;
  }
  if (p.deg() == 0) return out;
  if (p.deg() == 2) {
    // no rational roots left, so irreducible over Q
    out.factors.push_back(p.monic());
    return out;
  }
  // Degree >= 3 with no rational roots: a cubic is then irreducible; higher
  // degrees are not needed by the classifier and are passed through whole.
  out.factors.push_back(p.monic());
  if (p.deg() > 3) out.complete = false;
  return out;
}

}  // namespace cubinf
