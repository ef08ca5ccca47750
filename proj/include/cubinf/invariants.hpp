#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubinf/tables.hpp"
#include "cubinf/univariate.hpp"

namespace cubinf {

struct InconsistencyError : MathError {
  using MathError::MathError;
};

/// Euler characteristic of a smooth degree-d hypersurface in P^n.
long chi_smooth(int n, int d);

/// Generic-fiber Betti data from boundary data, isolated boundary case:
/// b2 = 8 - sum(mu_gen + mu_inf); mu = b2 - lambda.
struct BettiPair {
  long b2, mu;
};
BettiPair b2_from_boundary(long lambda, const std::vector<std::pair<long, long>>& mu_pairs);

/// Same for the non-reduced boundary case: b2 = 8 - sum(mu_gen) - chi_inf.
long b2_from_boundary_nonreduced(long mu_gen_sum, int chi_inf);

/// Top Betti defect from boundary data (3 variables): mu_sum - delta_chi.
long betti_defect(long mu_boundary_sum, int delta_chi_inf);

/// Total Milnor number of the affine singularities; nullopt = infinite
/// (non-isolated affine critical locus).
std::optional<long> affine_milnor_total(const PolyQ& f);

/// Squarefree monic generator of the critical-value ideal of f; nullopt when
/// the critical set is empty.
std::optional<UPoly> critical_values(const PolyQ& f);

struct GlobalInvariants {
  std::optional<long> mu_affine;          // nullopt = infinite
  std::optional<UPoly> critical_values;   // nullopt = unit ideal (no critical points)
  std::vector<UPoly> atyp_infinity;       // original-parameter jump loci, irreducible
  bool broughton = false;
  std::string broughton_case;
  bool global_fibration = false;
  std::string fibration_case;
  std::vector<std::string> findings;
};

/// Assemble the global invariants for a classified polynomial. The events'
/// loci live in the reduced parameter; they are pulled back to the original
/// one through the codomain scale and the reduction constant.
GlobalInvariants global_invariants(const PolyQ& f_original, const ReducedForm& rf,
                                   const Verdict& verdict);

/// Consistency of a table verdict with the boundary formulas; throws
/// InconsistencyError on violation (skipped for non-isolated rows).
void check_verdict_consistency(const ReducedForm& rf, const Verdict& v);

}  // namespace cubinf
