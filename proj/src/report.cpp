#include "cubinf/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cubinf {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json verification_json(const VerificationSection& v) {
  ordered_json j;
  j["passed"] = v.passed;
  j["seed"] = v.seed;
  ordered_json recs = ordered_json::array();
  for (auto& r : v.records) {
    ordered_json e;
    e["check"] = r.check;
    e["expected"] = r.expected;
    e["got"] = r.got;
    e["ok"] = r.ok;
    recs.push_back(e);
  }
  j["records"] = recs;
  return j;
}

}  // namespace

std::string report_to_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["input"] = r.input;
  j["status"] = r.status;
  j["exit_code"] = r.exit_code;
  if (!r.error.empty()) j["error"] = r.error;
  j["cubic_type"] = r.cubic_type;
  ordered_json nm;
  nm["available"] = r.normalizing_map_available;
  if (r.normalizing_map_available || !r.map_matrix.empty()) {
    nm["matrix"] = r.map_matrix;
    nm["translation"] = r.map_translation;
    nm["codomain_scale"] = r.map_scale;
  }
  if (r.lambda_family) nm["lambda"] = *r.lambda_family;
  if (!r.map_unavailable_reason.empty()) nm["unavailable_reason"] = r.map_unavailable_reason;
  j["applied_map"] = nm;
  j["reduced_coefficients"] = r.reduced_coeffs;
  j["reduced_constant"] = r.reduced_constant;
  j["class"] = r.class_tag;
  j["table"] = r.table_id;
  j["row"] = r.row_label;
  j["non_isolated"] = r.non_isolated;
  j["lambda"] = r.lambda;
  if (r.mu_table) j["mu"] = *r.mu_table;
  if (r.b2_table) j["b2"] = *r.b2_table;
  ordered_json pts = ordered_json::array();
  for (auto& p : r.points) {
    ordered_json e;
    e["point"] = p.point;
    e["generic_type"] = p.generic_type;
    e["mu_inf"] = p.mu_inf;
    pts.push_back(e);
  }
  j["points_at_infinity"] = pts;
  ordered_json evs = ordered_json::array();
  for (auto& ev : r.events) {
    ordered_json e;
    e["point_index"] = ev.point_index;
    e["t_locus"] = ev.t_locus;
    e["t_locus_input"] = ev.t_locus_input;
    e["generic_type"] = ev.generic_type;
    e["special_type"] = ev.special_type;
    e["jump_per_root"] = ev.jump_per_root;
    e["roots_exact"] = ev.roots_exact;
    e["roots_approx"] = ev.roots_approx;
    evs.push_back(e);
  }
  j["jump_events"] = evs;
  ordered_json inv;
  inv["mu_affine"] = r.mu_affine;
  inv["critical_values"] = r.critical_values_poly;
  inv["critical_values_approx"] = r.atypical_critical_approx;
  inv["atypical_at_infinity"] = r.atypical_infinity_polys;
  inv["atypical_at_infinity_approx"] = r.atypical_infinity_approx;
  ordered_json br;
  br["is_broughton"] = r.broughton;
  if (r.broughton) br["case"] = r.broughton_case;
  inv["broughton"] = br;
  ordered_json fb;
  fb["is_global_fibration"] = r.global_fibration;
  if (r.global_fibration) fb["case"] = r.fibration_case;
  inv["global_fibration"] = fb;
  j["invariants"] = inv;
  if (r.verification.requested) j["verification"] = verification_json(r.verification);
  j["findings"] = r.findings;
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  r.input = j.at("input").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.exit_code = j.at("exit_code").get<int>();
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  r.cubic_type = j.at("cubic_type").get<std::string>();
  auto& nm = j.at("applied_map");
  r.normalizing_map_available = nm.at("available").get<bool>();
  if (nm.contains("matrix")) {
    r.map_matrix = nm["matrix"].get<std::vector<std::vector<std::string>>>();
    r.map_translation = nm["translation"].get<std::vector<std::string>>();
    r.map_scale = nm["codomain_scale"].get<std::string>();
  }
  if (nm.contains("lambda")) r.lambda_family = nm["lambda"].get<std::string>();
  if (nm.contains("unavailable_reason"))
    r.map_unavailable_reason = nm["unavailable_reason"].get<std::string>();
  r.reduced_coeffs = j.at("reduced_coefficients").get<std::vector<std::string>>();
  r.reduced_constant = j.at("reduced_constant").get<std::string>();
  r.class_tag = j.at("class").get<std::string>();
  r.table_id = j.at("table").get<int>();
  r.row_label = j.at("row").get<std::string>();
  r.non_isolated = j.at("non_isolated").get<bool>();
  r.lambda = j.at("lambda").get<long>();
  if (j.contains("mu")) r.mu_table = j["mu"].get<long>();
  if (j.contains("b2")) r.b2_table = j["b2"].get<long>();
  for (auto& e : j.at("points_at_infinity")) {
    Report::PointEntry p;
    p.point = e.at("point").get<std::string>();
    p.generic_type = e.at("generic_type").get<std::string>();
    p.mu_inf = e.at("mu_inf").get<long>();
    r.points.push_back(p);
  }
  for (auto& e : j.at("jump_events")) {
    Report::EventEntry ev;
    ev.point_index = e.at("point_index").get<int>();
    ev.t_locus = e.at("t_locus").get<std::string>();
    ev.t_locus_input = e.at("t_locus_input").get<std::string>();
    ev.generic_type = e.at("generic_type").get<std::string>();
    ev.special_type = e.at("special_type").get<std::string>();
    ev.jump_per_root = e.at("jump_per_root").get<long>();
    ev.roots_exact = e.at("roots_exact").get<std::vector<std::string>>();
    ev.roots_approx = e.at("roots_approx").get<std::vector<std::string>>();
    r.events.push_back(ev);
  }
  auto& inv = j.at("invariants");
  r.mu_affine = inv.at("mu_affine").get<std::string>();
  r.critical_values_poly = inv.at("critical_values").get<std::string>();
  r.atypical_critical_approx = inv.at("critical_values_approx").get<std::vector<std::string>>();
  r.atypical_infinity_polys = inv.at("atypical_at_infinity").get<std::vector<std::string>>();
  r.atypical_infinity_approx =
      inv.at("atypical_at_infinity_approx").get<std::vector<std::string>>();
  r.broughton = inv.at("broughton").at("is_broughton").get<bool>();
  if (r.broughton) r.broughton_case = inv["broughton"]["case"].get<std::string>();
  r.global_fibration = inv.at("global_fibration").at("is_global_fibration").get<bool>();
  if (r.global_fibration) r.fibration_case = inv["global_fibration"]["case"].get<std::string>();
  if (j.contains("verification")) {
    r.verification.requested = true;
    auto& v = j["verification"];
    r.verification.passed = v.at("passed").get<bool>();
    r.verification.seed = v.at("seed").get<uint64_t>();
    for (auto& e : v.at("records")) {
      VerificationRecord rec;
      rec.check = e.at("check").get<std::string>();
      rec.expected = e.at("expected").get<std::string>();
      rec.got = e.at("got").get<std::string>();
      rec.ok = e.at("ok").get<bool>();
      r.verification.records.push_back(rec);
    }
  }
  r.findings = j.at("findings").get<std::vector<std::string>>();
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  os << "status: " << r.status << "\n";
  if (!r.error.empty()) os << "error: " << r.error << "\n";
  if (r.status != "ok") return os.str();
  os << "cubic type at infinity: " << r.cubic_type << "\n";
  os << "class: " << r.class_tag;
  if (r.table_id > 0) os << "  (table " << r.table_id << ", row " << r.row_label << ")";
  os << "\n";
  os << "reduced coefficients a0..a8:";
  for (auto& a : r.reduced_coeffs) os << " " << a;
  os << "\n";
  if (!r.points.empty()) {
    os << "points at infinity:\n";
    for (auto& p : r.points)
      os << "  " << p.point << "  generic " << p.generic_type << "  (boundary mu "
         << p.mu_inf << ")\n";
  } else {
    os << "points at infinity: none (every fiber is smooth along the boundary)\n";
  }
  for (auto& e : r.events) {
    os << "jump at point #" << e.point_index << ": " << e.generic_type << " -> "
       << e.special_type << " on " << e.t_locus_input << " = 0";
    if (!e.roots_approx.empty()) {
      os << "  [~";
      for (size_t i = 0; i < e.roots_approx.size(); ++i)
        os << (i ? ", " : " ") << e.roots_approx[i];
      os << " ]";
    }
    os << "\n";
  }
  os << "lambda = " << r.lambda;
  if (r.mu_table) os << ", mu = " << *r.mu_table;
  if (r.b2_table) os << ", b2 = " << *r.b2_table;
  if (r.non_isolated) os << "  [non-isolated class]";
  os << "\n";
  os << "affine Milnor total: " << r.mu_affine << "\n";
  os << "critical values: " << (r.critical_values_poly == "1" ? "none"
                                                              : r.critical_values_poly + " = 0");
  os << "\n";
  if (!r.atypical_infinity_polys.empty()) {
    os << "atypical values from infinity:";
    for (auto& p : r.atypical_infinity_polys) os << "  " << p << " = 0";
    os << "   (approx:";
    for (auto& a : r.atypical_infinity_approx) os << " " << a;
    os << ")\n";
  }
  os << "Broughton type: " << (r.broughton ? "yes - " + r.broughton_case : "no") << "\n";
  os << "global fibration: " << (r.global_fibration ? "yes - " + r.fibration_case : "no")
     << "\n";
  if (r.verification.requested) {
    os << "verification: " << (r.verification.passed ? "PASSED" : "FAILED") << " ("
       << r.verification.records.size() << " checks, seed " << r.verification.seed << ")\n";
    for (auto& rec : r.verification.records)
      if (!rec.ok)
        os << "  FAILED " << rec.check << ": expected " << rec.expected << ", got " << rec.got
           << "\n";
  }
  for (auto& f : r.findings) os << "finding: " << f << "\n";
  return os.str();
}

}  // namespace cubinf
