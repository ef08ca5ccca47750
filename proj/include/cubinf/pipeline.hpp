#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubinf/report.hpp"

namespace cubinf {

struct InputSpec {
  std::string polynomial_text;
  bool verify = false;
  bool json = false;
  uint64_t seed = 20240915;
};

/// Full pipeline: parse, classify the cubic part, normalize, reduce, run the
/// tables, compute global invariants, optionally cross-check with the local
/// oracle. Never throws; failures are encoded in status/exit_code.
Report classify_command(const InputSpec& spec);

/// Oracle cross-check of a computed verdict (germ types at sampled generic
/// parameters and at every special value, plus the affine Milnor number).
VerificationSection verify_mode(const PolyQ& f_original, const ReducedForm& rf,
                                const Verdict& verdict, uint64_t seed);

struct AuditRow {
  int table_id = 0;
  std::string row_label;
  std::string instance;  // the representative polynomial
  bool pass = false;
  std::vector<std::string> notes;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  bool all_pass = true;
  std::vector<std::string> findings;
};

/// Run every encoded table row on its built-in representative instance with
/// the oracle cross-check, and resolve the recorded table discrepancies.
AuditReport audit_tables(uint64_t seed = 20240915);

struct AuditInstance {
  int table_id;
  std::string row_label;
  std::array<Rat, 9> a;
};
const std::vector<AuditInstance>& audit_instances();

/// Reduced-coordinate polynomial a0 x0 + ... + a8 x2^2 + (normal form of ct).
PolyQ instance_polynomial(CubicType ct, const std::array<Rat, 9>& a);

}  // namespace cubinf
