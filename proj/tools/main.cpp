#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cubinf/pipeline.hpp"

namespace {

std::string read_polynomial_argument(const std::string& arg) {
  if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    // single polynomial per file; strip trailing newlines
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
  }
  return arg;
}

int run_classify(const std::string& arg, bool json, bool verify, uint64_t seed) {
  cubinf::InputSpec spec;
  spec.polynomial_text = read_polynomial_argument(arg);
  spec.verify = verify;
  spec.json = json;
  spec.seed = seed;
  cubinf::Report rep = cubinf::classify_command(spec);
  std::cout << (json ? cubinf::report_to_json(rep) + "\n" : cubinf::report_to_text(rep));
  return rep.exit_code;
}

int run_audit(bool json, uint64_t seed) {
  cubinf::AuditReport rep = cubinf::audit_tables(seed);
  if (json) {
    std::cout << "{\n  \"rows\": [\n";
    for (size_t i = 0; i < rep.rows.size(); ++i) {
      auto& r = rep.rows[i];
      std::cout << "    {\"table\": " << r.table_id << ", \"row\": \"" << r.row_label
                << "\", \"pass\": " << (r.pass ? "true" : "false") << "}"
                << (i + 1 < rep.rows.size() ? "," : "") << "\n";
    }
    std::cout << "  ],\n  \"all_pass\": " << (rep.all_pass ? "true" : "false") << "\n}\n";
  } else {
    for (auto& r : rep.rows) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  table " << r.table_id << "  row "
                << r.row_label << "  [" << r.instance << "]\n";
      for (auto& n : r.notes) std::cout << "      " << n << "\n";
    }
    for (auto& f : rep.findings) std::cout << "finding: " << f << "\n";
    std::cout << (rep.all_pass ? "AUDIT PASSED" : "AUDIT FAILED") << " (" << rep.rows.size()
              << " rows)\n";
  }
  return rep.all_pass ? 0 : 4;
}

int run_batch(const std::string& path, bool verify, uint64_t seed) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  int worst = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    cubinf::InputSpec spec;
    spec.polynomial_text = line;
    spec.verify = verify;
    spec.seed = seed;
    cubinf::Report rep = cubinf::classify_command(spec);
    std::cout << cubinf::report_to_json(rep) << "\n";
    worst = std::max(worst, rep.exit_code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification of degree-3 polynomials on C^3 at infinity"};
  app.require_subcommand(1);

  std::string poly_arg, batch_path;
  bool json = false, verify = false;
  uint64_t seed = 20240915;

  auto* classify = app.add_subcommand("classify", "classify one polynomial (text or file)");
  classify->add_option("polynomial", poly_arg, "polynomial in x0, x1, x2, or a file")->required();
  classify->add_flag("--json", json, "machine-readable report");
  classify->add_flag("--verify", verify, "cross-check the verdict with the local oracle");
  classify->add_option("--seed", seed, "seed for verification sampling");

  bool audit_json = false;
  uint64_t audit_seed = 20240915;
  auto* audit = app.add_subcommand("audit", "run every table row against its representative");
  audit->add_flag("--json", audit_json, "machine-readable matrix");
  audit->add_option("--seed", audit_seed, "seed for verification sampling");

  auto* dump = app.add_subcommand("tables-dump", "print the embedded table data verbatim");

  auto* batch = app.add_subcommand("batch", "classify one polynomial per line, JSON per line");
  batch->add_option("file", batch_path, "input file")->required();
  batch->add_flag("--verify", verify, "cross-check each verdict");
  batch->add_option("--seed", seed, "seed for verification sampling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return run_classify(poly_arg, json, verify, seed);
    if (audit->parsed()) return run_audit(audit_json, audit_seed);
    if (dump->parsed()) {
      std::cout << cubinf::tables_data_text();
      return 0;
    }
    if (batch->parsed()) return run_batch(batch_path, verify, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
