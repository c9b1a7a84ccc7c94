#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacsum/bigint.hpp"

namespace jacsum {

enum class CheckStatus { pass, fail, skip, audit };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // witness on failure (offending k, a, row, ...)
};

// Per-q verification record. Every integer is serialized in full as a
// decimal string (R_q outgrows 64 bits quickly).
struct QReport {
  std::int64_t q = 0, p = 0;
  int f = 0;
  std::int64_t n = 0, e = 0;
  bool has_rq = false;
  Int R, x;
  bool has_det = false;
  Int det;
  bool has_aq = false;
  std::int64_t a = 0;
  bool has_decomp = false;  // present iff p = 1 (mod 4) and f = 1
  std::int64_t c = 0, d = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void add(std::string name, bool ok, std::string detail = "");
  void add_status(std::string name, CheckStatus status, std::string detail = "");
};

// what: one of "rq", "xq", "det", "aq", "decomp", "all".
// Throws std::invalid_argument for a q that is not an odd prime power in
// desk-scale range, or an unknown selector.
QReport make_qreport(std::int64_t q, const std::string& what);

nlohmann::ordered_json report_to_json(const QReport& r);
std::string report_to_text(const QReport& r);

struct Summary {
  std::int64_t pass = 0, fail = 0, audit = 0;
  void absorb(const QReport& r);
};

// The machine-readable envelope shared by compute/verify/table:
// {"config": ..., "reports": [...], "summary": {"pass","fail","audit"}}.
nlohmann::ordered_json envelope_json(const nlohmann::ordered_json& config,
                                     const std::vector<QReport>& reports);

}  // namespace jacsum
