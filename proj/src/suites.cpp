#include "jacsum/suites.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jacsum/characters.hpp"
#include "jacsum/curves.hpp"
#include "jacsum/elementary.hpp"
#include "jacsum/matrices.hpp"

namespace jacsum {

namespace {

// Ordered parallel map: worker pool pulls indices, output keeps input order.
template <typename In, typename Fn>
std::vector<QReport> parallel_reports(const std::vector<In>& items, int jobs, Fn fn) {
  std::vector<QReport> out(items.size());
  if (items.empty()) return out;
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

QReport base_report(const PrimePower& pp) {
  QReport r;
  r.q = pp.q;
  r.p = pp.p;
  r.f = pp.f;
  r.n = (pp.q - 1) / 2;
  r.e = rq_normalization_exponent(pp.q);
  return r;
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi, int residue_mod4 = 0) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = std::max<std::int64_t>(lo, 3); p <= hi; p += 2)
    if (is_prime(p) && (residue_mod4 == 0 || p % 4 == residue_mod4)) out.push_back(p);
  return out;
}

// --- per-suite report builders ------------------------------------------

QReport suite_thm1_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  FqField field(pp.p, pp.f);
  CycloRing ring(pp.q - 1);
  CycloInt prod = rq_product_lambda(field, ring);
  auto rational = prod.as_rational_integer();
  r.add("rq_rational", rational.has_value());
  if (rational) {
    r.has_rq = true;
    r.R = *rational;
    Int denom = pow2(static_cast<unsigned long>(r.e));
    bool div_ok = divides(denom, r.R);
    r.add("rq_divisible", div_ok,
          div_ok ? "" : "2^" + std::to_string(r.e) + " does not divide " + to_decimal(r.R));
    if (div_ok) r.x = div_exact(r.R, denom);
  }
  GeneratorIndependence gi = verify_generator_independence(field, ring);
  r.add("rq_generator_independent", gi.ok,
        gi.ok ? "" : "witness s = " + std::to_string(gi.witness));
  return r;
}

QReport suite_thm2_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  FqField field(pp.p, pp.f);
  CycloRing ring(pp.q - 1);
  RqResult rq = compute_rq(field, ring);
  r.has_rq = true;
  r.R = rq.R;
  r.x = rq.x;
  r.det = det_exact(build_aq(field));
  r.has_det = true;
  CurveTrace t = trace_aq(field);
  r.has_aq = true;
  r.a = t.a;
  if (pp.q % 4 == 3) {
    bool ok = -r.det == r.x * r.x;
    r.add("thm12_det_identity", ok,
          ok ? "" : "-det = " + to_decimal(-r.det) + " but x^2 = " + to_decimal(r.x * r.x));
  } else {
    bool ok = 2 * r.det == r.a * r.x * r.x;
    r.add("thm12_det_identity", ok,
          ok ? "" : "2 det = " + to_decimal(2 * r.det) + " but a x^2 = " + to_decimal(r.a * r.x * r.x));
  }
  if (pp.p % 4 == 1 && pp.f == 1) {
    TwoSquareDecomp cd = decompose(pp.p);
    r.has_decomp = true;
    r.c = cd.c;
    r.d = cd.d;
    bool ok = divides(Int(cd.c), r.det) && div_exact(r.det, Int(cd.c)) == r.x * r.x;
    r.add("thm12_prime_quotient", ok,
          ok ? "" : "det / c_p != x^2 at p = " + std::to_string(pp.p));
    r.add("bew_half_sum", verify_bew_half_sum(pp.p));
  } else {
    r.add_status("thm12_prime_quotient", CheckStatus::skip, "requires p = 1 (mod 4), f = 1");
  }
  return r;
}

QReport suite_thm3_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  RqResult rq = compute_rq(pp.q);
  r.has_rq = true;
  r.R = rq.R;
  r.x = rq.x;
  Thm13Verdict v = thm13_congruences(pp.q, rq.R);
  if (pp.f > 1 && pp.q != 9) {
    r.add("thm13_divisible", v.ok_divisible, "R mod p = " + std::to_string(v.r_mod_p));
  } else if (pp.q == 9) {
    r.add("thm13_q9_exact", v.ok_q9, "R = " + to_decimal(rq.R));
  } else {
    std::ostringstream d;
    d << "R mod p = " << v.r_mod_p << ", rhs(floor(n/2)) = " << v.rhs_floor
      << ", rhs(e(q)) = " << v.rhs_e;
    // both readings are reported; a diverging reading is an audit finding,
    // the binding check is that at least one of them holds
    r.add_status("thm13_congruence_floor_reading",
                 v.ok_reading_floor ? CheckStatus::pass : CheckStatus::audit, d.str());
    r.add_status("thm13_congruence_e_reading",
                 v.ok_reading_e ? CheckStatus::pass : CheckStatus::audit, d.str());
    r.add("thm13_congruence_some_reading", v.ok_reading_floor || v.ok_reading_e, d.str());
    r.add("thm13_legendre_claim", v.ok_symbol,
          "(R/p) = " + std::to_string(jacobi_symbol(v.r_mod_p, pp.p)));
  }
  return r;
}

QReport suite_cor1_one(std::int64_t p) {
  CorollaryReport c = corollary_reconstruction(p);
  QReport r;
  r.q = p;
  r.p = p;
  r.f = 1;
  r.n = (p - 1) / 2;
  r.e = rq_normalization_exponent(p);
  r.has_rq = true;
  r.R = c.R;
  r.x = div_exact(c.R, pow2(static_cast<unsigned long>(r.e)));
  r.det = c.det;
  r.has_det = true;
  std::ostringstream d;
  d << "root = " << to_decimal(c.root) << ", delta = " << c.delta
    << ", reconstruction = " << to_decimal(c.recon);
  r.add("cor11_reconstruction", c.ok, d.str());
  return r;
}

QReport suite_lemma21_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  FqField field(pp.p, pp.f);
  CycloRing ring(pp.q - 1);
  Character phi(field, ring, field.n());
  bool eigen_ok = true, pair_ok = true;
  std::string witness;
  for (std::int64_t k = 1; k <= field.n(); ++k) {
    EigenCheck ec = verify_eigenrelation(field, ring, k);
    if (!ec.ok) {
      eigen_ok = false;
      witness = "k = " + std::to_string(k) + ", row " + std::to_string(ec.row);
      break;
    }
    CycloInt two_lambda = lambda_sum(field, ring, k).scaled(2);
    CycloInt pair = jacobi_sum(phi, Character(field, ring, k)) +
                    jacobi_sum(phi, Character(field, ring, -k));
    if (k % 2 == 1) pair = -pair;
    if (two_lambda != pair) {
      pair_ok = false;
      witness = "k = " + std::to_string(k);
      break;
    }
  }
  r.add("lemma21_eigen_relation", eigen_ok, eigen_ok ? "" : witness);
  r.add("lemma21_lambda_pair_identity", pair_ok, pair_ok ? "" : witness);
  if (eigen_ok && pair_ok) {
    Int prod = det_eigen_product(field, ring);
    Int det = det_exact(build_aq(field));
    r.has_det = true;
    r.det = det;
    r.add("lemma21_det_is_eigen_product", prod == det,
          prod == det ? "" : "prod = " + to_decimal(prod) + ", det = " + to_decimal(det));
  }
  return r;
}

// Jenkins: odd moduli m (not necessarily prime powers) in [qmin, qmax].
QReport suite_lemma22_one(std::int64_t m) {
  QReport r;
  r.q = m;
  bool ok = true;
  std::string witness;
  for (std::int64_t a = 1; a < m && ok; ++a) {
    if (gcd_i64(a, m) != 1) continue;
    JenkinsCounts jc = jenkins_counts(a, m);
    int symbol = jacobi_symbol(a, m);
    int c_par = jc.count % 2 == 0 ? 1 : -1;
    int k_par = jc.k_a % 2 == 0 ? 1 : -1;
    if (c_par != symbol || k_par != symbol) {
      ok = false;
      witness = "a = " + std::to_string(a);
    }
  }
  r.add("lemma22_jenkins", ok, witness);
  return r;
}

QReport suite_lemma23_one(std::int64_t m) {
  QReport r;
  r.q = m;
  bool ok = true;
  std::string witness;
  for (std::int64_t a = 1; a < m && ok; ++a) {
    if (gcd_i64(a, m) != 1) continue;
    for (std::int64_t i = 1; i < m - 1 && ok; ++i)
      for (std::int64_t j = i + 1; j <= m - 1; ++j)
        if (!pan_identity_check(a, m, i, j)) {
          ok = false;
          witness = "a=" + std::to_string(a) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
          break;
        }
  }
  r.add("lemma23_pan", ok, witness);
  return r;
}

QReport suite_lemma24_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  bool ok = true;
  std::string witness;
  for (std::int64_t a = 1; a < pp.q && ok; ++a) {
    if (gcd_i64(a, pp.q - 1) != 1) continue;
    if (!x_parity_lemma(pp.q, a)) {
      ok = false;
      witness = "a = " + std::to_string(a);
    }
  }
  r.add("lemma24_x_parity", ok, witness);
  return r;
}

QReport suite_lemma25_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  FqField field(pp.p, pp.f);
  CycloRing ring(pp.q - 1);
  Character phi(field, ring, field.n());
  int phi_m1 = field.quadratic_character(-field.one());
  bool ok = true;
  std::string witness;
  for (std::int64_t k = 1; k <= pp.q - 2; ++k) {
    CycloInt lhs = jacobi_sum(phi, Character(field, ring, k));
    // phi chi^{-k} = chi^{n-k}
    CycloInt rhs = jacobi_sum(phi, Character(field, ring, field.n() - k)).scaled(phi_m1);
    if (lhs != rhs) {
      ok = false;
      witness = "k = " + std::to_string(k);
      break;
    }
  }
  r.add("lemma25_transform", ok, witness);
  return r;
}

QReport suite_lemma41_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  FqField field(pp.p, pp.f);
  CycloRing ring(pp.q - 1);
  ReductionMap map(ring, field);
  bool ok = true;
  std::string witness;
  for (std::int64_t i = 1; i <= pp.q - 2 && ok; ++i)
    for (std::int64_t j = 1; j <= pp.q - 2; ++j)
      if (!cohen_congruence_check(map, i, j)) {
        ok = false;
        witness = "i=" + std::to_string(i) + " j=" + std::to_string(j);
        break;
      }
  r.add("lemma41_cohen", ok, witness);
  return r;
}

QReport suite_lemma42_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  FqField field(pp.p, pp.f);
  CycloRing ring(pp.q - 1);
  ReductionMap map(ring, field);
  bool ok = true;
  std::string witness;
  for (std::int64_t k = 1; k <= pp.q - 2; ++k)
    if (!bew_identity_check(map, k)) {
      ok = false;
      witness = "k = " + std::to_string(k);
      break;
    }
  r.add("lemma42_bew", ok, witness);
  return r;
}

QReport suite_lemma43_one(std::int64_t p) {
  QReport r;
  r.q = p;
  r.p = p;
  r.f = 1;
  bool ok = verify_bp_symbol(p);
  r.add("lemma43_bp_symbol", ok, ok ? "" : "p = " + std::to_string(p));
  return r;
}

QReport suite_lemma44_one(std::int64_t p) {
  QReport r;
  r.q = p;
  r.p = p;
  r.f = 1;
  bool ok = mordell_congruence(p);
  r.add("lemma44_mordell", ok, ok ? "" : "p = " + std::to_string(p));
  return r;
}

QReport suite_lemma45_one(std::int64_t p) {
  QReport r;
  r.q = p;
  r.p = p;
  r.f = 1;
  ClassNumberRecord rec = class_number(p);
  std::int64_t forms = class_number_by_forms(p);
  r.add("lemma45_class_number_oracle", rec.h == forms,
        "s_w formula h = " + std::to_string(rec.h) + ", reduced forms = " + std::to_string(forms));
  YzParity yz = yz_parity(p);
  r.add("lemma45_yz_parity", yz.ok,
        "y = " + std::to_string(yz.y) + ", z = " + std::to_string(yz.z) +
            ", h = " + std::to_string(rec.h));
  return r;
}

QReport suite_carlitz_one(std::int64_t p) {
  QReport r;
  r.q = p;
  r.p = p;
  r.f = 1;
  Int det = carlitz_determinant(p);
  Int expect = int_pow(static_cast<unsigned long>(p), static_cast<unsigned long>((p - 3) / 2));
  r.add("carlitz_det", det == expect,
        "det = " + to_decimal(det) + ", p^((p-3)/2) = " + to_decimal(expect));
  FqField field(p, 1);
  CycloRing ring(p - 1);
  Int prod = carlitz_jacobi_product(field, ring);
  Int signed_prod = (p - 1) / 2 % 2 == 0 ? prod : Int(-prod);
  r.add("carlitz_jacobi_product", signed_prod == det,
        "(-1)^((p-1)/2) prod J = " + to_decimal(signed_prod));
  return r;
}

QReport suite_wuwang_one(const PrimePower& pp) {
  QReport r = base_report(pp);
  FqField field(pp.p, pp.f);
  CycloRing ring(pp.q - 1);
  bool ok = true;
  std::string witness;
  for (std::int64_t rr = 1; rr <= pp.q - 2; ++rr)
    if (!wu_wang_check(field, ring, rr)) {
      ok = false;
      witness = "r = " + std::to_string(rr);
      break;
    }
  r.add("wuwang_identity", ok, witness);
  return r;
}

QReport suite_table_one(const TableRow& row) {
  QReport r;
  auto pp = as_odd_prime_power(row.q);
  r.q = row.q;
  r.p = pp->p;
  r.f = pp->f;
  r.n = (row.q - 1) / 2;
  r.e = rq_normalization_exponent(row.q);
  r.has_rq = true;
  r.R = row.R;
  r.x = row.x;
  r.add("rq_paths_agree", row.paths_agree);
  if (!row.has_published) {
    r.add_status("table_audit", CheckStatus::pass, "not in the published table");
  } else if (row.source == "paper") {
    r.add_status("table_audit", CheckStatus::pass, "matches published value " + to_decimal(row.published));
  } else {
    r.add_status("table_audit", CheckStatus::audit,
                 "computed " + to_decimal(row.R) + " but the table prints " + to_decimal(row.published));
  }
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"thm1",    "thm2",    "thm3",    "cor1",    "lemma21", "lemma22",
          "lemma23", "lemma24", "lemma25", "lemma41", "lemma42", "lemma43",
          "lemma44", "lemma45", "carlitz", "wuwang",  "table",   "all"};
}

bool is_suite_name(const std::string& name) {
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

const std::map<std::int64_t, Int>& published_rq_table() {
  static const std::map<std::int64_t, Int> table = {
      {7, -4},  {9, -2},    {11, 16},   {13, -12}, {17, -60},
      {19, 256}, {23, -1024}, {25, 2400}, {27, 4096}, {29, 320}};
  return table;
}

std::vector<TableRow> table_rows(std::int64_t qmin, std::int64_t qmax, int jobs) {
  auto pps = odd_prime_powers_in(qmin, qmax);
  std::vector<TableRow> rows(pps.size());
  auto compute_row = [&](std::size_t i) {
    const PrimePower& pp = pps[i];
    TableRow row;
    row.q = pp.q;
    FqField field(pp.p, pp.f);
    CycloRing ring(pp.q - 1);
    CycloInt lam = rq_product_lambda(field, ring);
    CycloInt jac = rq_product_jacobi(field, ring);
    row.paths_agree = lam == jac;
    RqResult rq = finalize_rq(pp.q, lam);
    row.R = rq.R;
    row.x = rq.x;
    auto it = published_rq_table().find(pp.q);
    if (it != published_rq_table().end()) {
      row.has_published = true;
      row.published = it->second;
      row.source = row.published == row.R ? "paper" : "mismatch";
    } else {
      row.source = "computed";
    }
    return row;
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < pps.size(); ++i) rows[i] = compute_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= pps.size()) return;
        try {
          rows[i] = compute_row(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, static_cast<int>(pps.size())); ++t)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "q,R_q,x_q,source\n";
  for (const auto& r : rows)
    os << r.q << "," << to_decimal(r.R) << "," << to_decimal(r.x) << "," << r.source << "\n";
  return os.str();
}

std::vector<QReport> table_reports(const std::vector<TableRow>& rows) {
  std::vector<QReport> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(suite_table_one(r));
  return out;
}

CorollaryReport corollary_reconstruction(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 3)
    throw std::invalid_argument("corollary_reconstruction: requires a prime p = 3 (mod 4)");
  CorollaryReport out;
  out.p = p;
  FqField field(p, 1);
  CycloRing ring(p - 1);
  RqResult rq = compute_rq(field, ring);
  out.R = rq.R;
  out.det = det_exact(build_aq(field));
  std::int64_t n = (p - 1) / 2;
  out.radicand = -pow2(static_cast<unsigned long>(n - 1)) * out.det;
  auto root = sqrt_exact(out.radicand);
  if (!root)
    throw verification_error("corollary_reconstruction: -2^{n-1} det A_p is not a perfect square");
  out.root = *root;
  out.delta = 0;
  for (int delta : {1, -1}) {
    Int val = Int(-2 * delta) * out.root;
    if (jacobi_symbol(mod_i64(val, p), p) == 1) {
      out.delta = delta;
      break;
    }
  }
  out.recon = out.delta * out.root;
  out.ok = out.delta != 0 && out.recon == out.R;
  return out;
}

SuiteResult run_suite(const std::string& name, const SweepConfig& config) {
  if (config.qmin < 3 || config.qmin > config.qmax)
    throw std::invalid_argument("run_suite: need 3 <= qmin <= qmax");
  SuiteResult result;
  result.suite = name;
  result.config = config;

  auto over_prime_powers = [&](auto fn, int residue_mod4 = 0) {
    auto pps = odd_prime_powers_in(config.qmin, config.qmax);
    if (residue_mod4 != 0) {
      std::vector<PrimePower> filtered;
      for (const auto& pp : pps)
        if (pp.q % 4 == residue_mod4) filtered.push_back(pp);
      pps = filtered;
    }
    return parallel_reports(pps, config.jobs, fn);
  };
  auto over_primes = [&](auto fn, int residue_mod4, std::int64_t min_exclusive) {
    std::vector<std::int64_t> ps = primes_in(config.qmin, config.qmax, residue_mod4);
    std::vector<std::int64_t> kept;
    for (std::int64_t p : ps)
      if (p > min_exclusive) kept.push_back(p);
    return parallel_reports(kept, config.jobs, fn);
  };

  if (name == "thm1") {
    result.reports = over_prime_powers(suite_thm1_one);
  } else if (name == "thm2") {
    result.reports = over_prime_powers(suite_thm2_one);
  } else if (name == "thm3") {
    result.reports = over_prime_powers(suite_thm3_one);
  } else if (name == "cor1") {
    result.reports = over_primes(suite_cor1_one, 3, 2);
  } else if (name == "lemma21") {
    result.reports = over_prime_powers(suite_lemma21_one);
  } else if (name == "lemma22") {
    std::vector<std::int64_t> ms;
    for (std::int64_t m = std::max<std::int64_t>(config.qmin, 3); m <= config.qmax; ++m)
      if (m % 2 == 1) ms.push_back(m);
    result.reports = parallel_reports(ms, config.jobs, suite_lemma22_one);
  } else if (name == "lemma23") {
    std::vector<std::int64_t> ms;
    for (std::int64_t m = std::max<std::int64_t>(config.qmin, 3); m <= config.qmax; ++m)
      ms.push_back(m);
    result.reports = parallel_reports(ms, config.jobs, suite_lemma23_one);
  } else if (name == "lemma24") {
    result.reports = over_prime_powers(suite_lemma24_one, 3);
  } else if (name == "lemma25") {
    result.reports = over_prime_powers(suite_lemma25_one);
  } else if (name == "lemma41") {
    result.reports = over_prime_powers(suite_lemma41_one);
  } else if (name == "lemma42") {
    result.reports = over_prime_powers(suite_lemma42_one);
  } else if (name == "lemma43") {
    result.reports = over_primes(suite_lemma43_one, 1, 2);
  } else if (name == "lemma44") {
    result.reports = over_primes(suite_lemma44_one, 3, 3);
  } else if (name == "lemma45") {
    result.reports = over_primes(suite_lemma45_one, 3, 3);
  } else if (name == "carlitz") {
    result.reports = over_primes(suite_carlitz_one, 0, 2);
  } else if (name == "wuwang") {
    result.reports = over_prime_powers(suite_wuwang_one, 3);
  } else if (name == "table") {
    result.reports = table_reports(table_rows(config.qmin, config.qmax, config.jobs));
  } else if (name == "all") {
    for (const auto& sub : suite_names()) {
      if (sub == "all") continue;
      SuiteResult r = run_suite(sub, config);
      for (auto& rep : r.reports) result.reports.push_back(std::move(rep));
    }
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }

  for (const auto& r : result.reports) result.summary.absorb(r);
  return result;
}

}  // namespace jacsum
