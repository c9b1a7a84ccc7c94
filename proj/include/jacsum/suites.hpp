#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jacsum/report.hpp"

namespace jacsum {

struct SweepConfig {
  std::int64_t qmin = 3;
  std::int64_t qmax = 60;
  int jobs = 1;  // worker pool over q; results are merged in q order
};

struct SuiteResult {
  std::string suite;
  SweepConfig config;
  std::vector<QReport> reports;
  Summary summary;

  bool ok() const { return summary.fail == 0; }
};

// Suite names: thm1 thm2 thm3 cor1 lemma21 lemma22 lemma23 lemma24 lemma25
// lemma41 lemma42 lemma43 lemma44 lemma45 carlitz wuwang table all.
// Each checks one family of identities; "table" audits the published R_q
// values (mismatches get status "audit", which never makes a suite fail).
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
SuiteResult run_suite(const std::string& name, const SweepConfig& config);

// The published reference values of R_q for 7 <= q <= 29.
const std::map<std::int64_t, Int>& published_rq_table();

struct TableRow {
  std::int64_t q = 0;
  Int R, x;
  bool paths_agree = false;
  bool has_published = false;
  Int published;
  std::string source;  // "computed" | "paper" | "mismatch"
};

std::vector<TableRow> table_rows(std::int64_t qmin, std::int64_t qmax, int jobs = 1);
std::string table_csv(const std::vector<TableRow>& rows);
std::vector<QReport> table_reports(const std::vector<TableRow>& rows);

struct CorollaryReport {
  std::int64_t p = 0;
  Int det;       // det A_p
  Int radicand;  // -2^{n-1} det A_p, a perfect square
  Int root;      // its nonnegative square root
  int delta = 0; // the sign with (-2 delta root / p) = 1
  Int R;         // directly computed R_p
  Int recon;     // delta * root
  bool ok = false;
};

// R_p = delta_p sqrt(-2^{n-1} det A_p) for primes p = 3 (mod 4).
CorollaryReport corollary_reconstruction(std::int64_t p);

}  // namespace jacsum
