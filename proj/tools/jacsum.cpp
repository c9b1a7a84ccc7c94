// jacsum: exact Jacobi-sum products R_q, cyclotomic matrices A_q, and
// mechanical verification of the identities relating them.
//
// Subcommands:
//   compute   --q N --what rq|xq|det|aq|decomp|all [--format json|text]
//   verify    --suite S [--qmin A] [--qmax B] [--jobs J] [--format json|text]
//   table     [--qmin 7] [--qmax 29] [--jobs J] [--format csv|json]
//   corollary --p P [--format json|text]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// Table-audit discrepancies (computed value differs from the published
// table) are reported with status "audit" and do not affect exit codes.

#include <exception>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacsum/report.hpp"
#include "jacsum/suites.hpp"

namespace {

int default_jobs() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

int run_compute(std::int64_t q, const std::string& what, const std::string& format) {
  jacsum::QReport r = jacsum::make_qreport(q, what);
  if (format == "json") {
    nlohmann::ordered_json config;
    config["command"] = "compute";
    config["q"] = std::to_string(q);
    config["what"] = what;
    std::cout << jacsum::envelope_json(config, {r}).dump(2) << "\n";
  } else {
    std::cout << jacsum::report_to_text(r);
  }
  return what == "all" && !r.all_passed() ? 1 : 0;
}

int run_verify(const std::string& suite, const jacsum::SweepConfig& cfg,
               const std::string& format) {
  jacsum::SuiteResult result = jacsum::run_suite(suite, cfg);
  if (format == "json") {
    nlohmann::ordered_json config;
    config["command"] = "verify";
    config["suite"] = suite;
    config["qmin"] = std::to_string(cfg.qmin);
    config["qmax"] = std::to_string(cfg.qmax);
    std::cout << jacsum::envelope_json(config, result.reports).dump(2) << "\n";
  } else {
    std::cout << "suite " << suite << ", q in [" << cfg.qmin << ", " << cfg.qmax << "]\n";
    for (const auto& rep : result.reports) {
      for (const auto& c : rep.checks) {
        if (c.status == jacsum::CheckStatus::fail || c.status == jacsum::CheckStatus::audit) {
          std::cout << "  [" << jacsum::to_string(c.status) << "] q = " << rep.q << " " << c.name;
          if (!c.detail.empty()) std::cout << ": " << c.detail;
          std::cout << "\n";
        }
      }
    }
    std::cout << "summary: pass = " << result.summary.pass << ", fail = " << result.summary.fail
              << ", audit = " << result.summary.audit << "\n";
  }
  return result.ok() ? 0 : 1;
}

int run_table(std::int64_t qmin, std::int64_t qmax, int jobs, const std::string& format) {
  auto rows = jacsum::table_rows(qmin, qmax, jobs);
  bool paths_ok = true;
  for (const auto& r : rows) paths_ok = paths_ok && r.paths_agree;
  if (format == "json") {
    nlohmann::ordered_json config;
    config["command"] = "table";
    config["qmin"] = std::to_string(qmin);
    config["qmax"] = std::to_string(qmax);
    std::cout << jacsum::envelope_json(config, jacsum::table_reports(rows)).dump(2) << "\n";
  } else {
    std::cout << jacsum::table_csv(rows);
  }
  return paths_ok ? 0 : 1;
}

int run_corollary(std::int64_t p, const std::string& format) {
  jacsum::CorollaryReport rep = jacsum::corollary_reconstruction(p);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["p"] = std::to_string(rep.p);
    j["det_Ap"] = jacsum::to_decimal(rep.det);
    j["radicand"] = jacsum::to_decimal(rep.radicand);
    j["root"] = jacsum::to_decimal(rep.root);
    j["delta"] = std::to_string(rep.delta);
    j["R_p"] = jacsum::to_decimal(rep.R);
    j["reconstruction"] = jacsum::to_decimal(rep.recon);
    j["ok"] = rep.ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "p = " << rep.p << "\n"
              << "  det A_p        = " << jacsum::to_decimal(rep.det) << "\n"
              << "  -2^(n-1) det   = " << jacsum::to_decimal(rep.radicand) << "\n"
              << "  sqrt           = " << jacsum::to_decimal(rep.root) << "\n"
              << "  delta_p        = " << rep.delta << "\n"
              << "  reconstruction = " << jacsum::to_decimal(rep.recon) << "\n"
              << "  R_p (direct)   = " << jacsum::to_decimal(rep.R) << "\n"
              << "  [" << (rep.ok ? "pass" : "fail") << "] cor11_reconstruction\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi-sum products and cyclotomic matrix determinants, exactly"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "per-q quantities and checks");
  std::int64_t q = 0;
  std::string what = "all";
  std::string compute_format = "text";
  compute->add_option("--q", q, "odd prime power >= 3")->required();
  compute->add_option("--what", what, "rq|xq|det|aq|decomp|all")
      ->check(CLI::IsMember({"rq", "xq", "det", "aq", "decomp", "all"}));
  compute->add_option("--format", compute_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "run a theorem/lemma suite over a range");
  std::string suite;
  jacsum::SweepConfig cfg;
  cfg.jobs = default_jobs();
  std::string verify_format = "text";
  verify->add_option("--suite", suite, "suite name (see --help-suites)")->required();
  verify->add_option("--qmin", cfg.qmin, "lower bound (default 3)");
  verify->add_option("--qmax", cfg.qmax, "upper bound (default 60)");
  verify->add_option("--jobs", cfg.jobs, "worker threads");
  verify->add_option("--format", verify_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "audit the published R_q table");
  std::int64_t qmin = 7, qmax = 29;
  int table_jobs = default_jobs();
  std::string table_format = "csv";
  table->add_option("--qmin", qmin, "lower bound (default 7)");
  table->add_option("--qmax", qmax, "upper bound (default 29)");
  table->add_option("--jobs", table_jobs, "worker threads");
  table->add_option("--format", table_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* corollary = app.add_subcommand("corollary", "R_p reconstruction for p = 3 (mod 4)");
  std::int64_t p = 0;
  std::string cor_format = "text";
  corollary->add_option("--p", p, "prime p = 3 (mod 4)")->required();
  corollary->add_option("--format", cor_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return run_compute(q, what, compute_format);
    if (verify->parsed()) {
      if (!jacsum::is_suite_name(suite)) {
        std::cerr << "unknown suite '" << suite << "'; valid:";
        for (const auto& s : jacsum::suite_names()) std::cerr << " " << s;
        std::cerr << "\n";
        return 2;
      }
      return run_verify(suite, cfg, verify_format);
    }
    if (table->parsed()) return run_table(qmin, qmax, table_jobs, table_format);
    if (corollary->parsed()) return run_corollary(p, cor_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
