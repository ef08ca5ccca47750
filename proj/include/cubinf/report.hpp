#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubinf/invariants.hpp"
#include "cubinf/tables.hpp"

namespace cubinf {

struct VerificationRecord {
  std::string check;     // what was compared
  std::string expected;
  std::string got;
  bool ok = false;
};

struct VerificationSection {
  bool requested = false;
  bool passed = true;
  uint64_t seed = 0;
  std::vector<VerificationRecord> records;
};

/// Full machine-readable classification report.
struct Report {
  int schema_version = 1;
  std::string input;
  std::string status;  // ok | parse-error | not-b-type | unsupported-extension | inconsistent
  int exit_code = 0;
  std::string error;  // for failures before a verdict exists

  std::string cubic_type;
  bool normalizing_map_available = false;
  std::vector<std::vector<std::string>> map_matrix;  // linear part of the applied map
  std::vector<std::string> map_translation;
  std::string map_scale;
  std::optional<std::string> lambda_family;  // General family parameter
  std::string map_unavailable_reason;

  std::vector<std::string> reduced_coeffs;  // a0..a8
  std::string reduced_constant;

  std::string class_tag;
  int table_id = 0;
  std::string row_label;
  bool non_isolated = false;
  long lambda = 0;
  std::optional<long> mu_table, b2_table;

  struct PointEntry {
    std::string point;
    std::string generic_type;
    long mu_inf = 0;
  };
  std::vector<PointEntry> points;

  struct EventEntry {
    int point_index = 0;
    std::string t_locus;        // reduced parameter
    std::string t_locus_input;  // pulled back to the input parameter
    std::string generic_type, special_type;
    long jump_per_root = 0;
    std::vector<std::string> roots_exact;   // exact descriptions
    std::vector<std::string> roots_approx;  // decimal, 6 significant digits
  };
  std::vector<EventEntry> events;

  std::string mu_affine;  // integer or "infinite"
  std::string critical_values_poly;  // "1" when the critical set is empty
  std::vector<std::string> atypical_critical_approx;
  std::vector<std::string> atypical_infinity_polys;
  std::vector<std::string> atypical_infinity_approx;
  bool broughton = false;
  std::string broughton_case;
  bool global_fibration = false;
  std::string fibration_case;

  VerificationSection verification;
  std::vector<std::string> findings;
};

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace cubinf
