#include "jacsum/report.hpp"

#include <sstream>
#include <stdexcept>

#include "jacsum/characters.hpp"
#include "jacsum/curves.hpp"
#include "jacsum/elementary.hpp"
#include "jacsum/matrices.hpp"

namespace jacsum {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    case CheckStatus::audit: return "audit";
  }
  return "?";
}

bool QReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

void QReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void QReport::add_status(std::string name, CheckStatus status, std::string detail) {
  checks.push_back({std::move(name), status, std::move(detail)});
}

QReport make_qreport(std::int64_t q, const std::string& what) {
  auto pp = as_odd_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime power");
  bool needs_rq = what == "rq" || what == "xq" || what == "all";
  bool needs_det = what == "det" || what == "all";
  bool needs_aq = what == "aq" || what == "all";
  bool needs_decomp = what == "decomp" || what == "all";
  if (!(needs_rq || needs_det || needs_aq || needs_decomp))
    throw std::invalid_argument("unknown selector '" + what + "'");
  bool run_checks = what == "all";

  QReport r;
  r.q = q;
  r.p = pp->p;
  r.f = pp->f;
  r.n = (q - 1) / 2;
  r.e = rq_normalization_exponent(q);

  FqField field(pp->p, pp->f);

  if (needs_rq || run_checks) {
    CycloRing ring(q - 1);
    CycloInt lam_path = rq_product_lambda(field, ring);
    auto rational = lam_path.as_rational_integer();
    if (run_checks)
      r.add("rq_rational", rational.has_value(),
            rational ? "" : "product is not a rational integer");
    if (!rational) {
      if (!run_checks) throw verification_error("R_q is not a rational integer");
    } else {
      r.has_rq = true;
      r.R = *rational;
      Int denom = pow2(static_cast<unsigned long>(r.e));
      bool div_ok = divides(denom, r.R);
      if (run_checks)
        r.add("rq_divisible", div_ok,
              div_ok ? "" : "2^" + std::to_string(r.e) + " does not divide " + to_decimal(r.R));
      if (div_ok) r.x = div_exact(r.R, denom);
      if (run_checks) {
        CycloInt jac_path = rq_product_jacobi(field, ring);
        r.add("rq_paths_agree", lam_path == jac_path,
              lam_path == jac_path ? "" : "lambda product != direct Jacobi product");
      }
    }
    if (run_checks) {
      Int eigen = det_eigen_product(field, ring);
      r.det = det_exact(build_aq(field));
      r.has_det = true;
      r.add("eigen_product", eigen == r.det,
            eigen == r.det ? "" : "prod lambda_k = " + to_decimal(eigen) + " but det = " + to_decimal(r.det));
    }
  }

  if (needs_det && !r.has_det) {
    r.det = det_exact(build_aq(field));
    r.has_det = true;
  }

  if (needs_aq || run_checks) {
    CurveTrace t = trace_aq(field);
    r.has_aq = true;
    r.a = t.a;
    if (run_checks) r.add("hasse_bound", t.a * t.a <= 4 * q, "a_q = " + std::to_string(t.a));
  }

  if ((needs_decomp || run_checks) && pp->p % 4 == 1 && pp->f == 1) {
    TwoSquareDecomp cd = decompose(pp->p);
    r.has_decomp = true;
    r.c = cd.c;
    r.d = cd.d;
    if (run_checks)
      r.add("two_square_decomp",
            cd.c * cd.c + 4 * cd.d * cd.d == pp->p && mod_pos(cd.c, 4) == 1 && cd.d >= 0,
            "c = " + std::to_string(cd.c) + ", d = " + std::to_string(cd.d));
  } else if (needs_decomp && !run_checks) {
    r.add_status("two_square_decomp", CheckStatus::skip, "requires p = 1 (mod 4) and f = 1");
  }

  if (run_checks) {
    // determinant identity, split on q mod 4
    if (r.has_rq && r.has_det) {
      if (q % 4 == 3) {
        bool ok = -r.det == r.x * r.x;
        r.add("thm12_det_identity", ok,
              ok ? "" : "-det = " + to_decimal(-r.det) + ", x^2 = " + to_decimal(r.x * r.x));
      } else {
        bool ok = 2 * r.det == r.a * r.x * r.x;
        r.add("thm12_det_identity", ok,
              ok ? "" : "2 det = " + to_decimal(2 * r.det) + ", a x^2 = " + to_decimal(r.a * r.x * r.x));
      }
      if (r.has_decomp) {
        bool ok = r.c != 0 && divides(Int(r.c), r.det) && div_exact(r.det, Int(r.c)) == r.x * r.x;
        r.add("thm12_prime_quotient", ok,
              ok ? "" : "det = " + to_decimal(r.det) + ", c_p = " + std::to_string(r.c));
      } else {
        r.add_status("thm12_prime_quotient", CheckStatus::skip, "requires p = 1 (mod 4) and f = 1");
      }
    }
    // local congruences of R_q
    if (r.has_rq) {
      Thm13Verdict v = thm13_congruences(q, r.R);
      std::ostringstream detail;
      if (v.f > 1 && q != 9) {
        detail << "R mod p = " << v.r_mod_p;
      } else if (q == 9) {
        detail << "R = " << to_decimal(r.R);
      } else {
        detail << "R mod p = " << v.r_mod_p << ", rhs(floor) = " << v.rhs_floor
               << ", rhs(e) = " << v.rhs_e << ", readings "
               << (v.ok_reading_floor ? "floor" : "") << (v.ok_reading_floor && v.ok_reading_e ? "+" : "")
               << (v.ok_reading_e ? "e" : "") << (v.ok_reading_floor || v.ok_reading_e ? " hold" : " both fail");
      }
      r.add("thm13_congruence", v.ok, detail.str());
    }
  }
  return r;
}

nlohmann::ordered_json report_to_json(const QReport& r) {
  nlohmann::ordered_json j;
  j["q"] = std::to_string(r.q);
  j["p"] = std::to_string(r.p);
  j["f"] = std::to_string(r.f);
  j["n"] = std::to_string(r.n);
  j["e"] = std::to_string(r.e);
  if (r.has_rq) {
    j["R_q"] = to_decimal(r.R);
    j["x_q"] = to_decimal(r.x);
  }
  if (r.has_det) j["det_Aq"] = to_decimal(r.det);
  if (r.has_aq) j["a_q"] = std::to_string(r.a);
  if (r.has_decomp) {
    j["c_p"] = std::to_string(r.c);
    j["d_p"] = std::to_string(r.d);
  }
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

std::string report_to_text(const QReport& r) {
  std::ostringstream os;
  os << "q = " << r.q << " (p = " << r.p << ", f = " << r.f << ", n = " << r.n
     << ", e = " << r.e << ")\n";
  if (r.has_rq) {
    os << "  R_q    = " << to_decimal(r.R) << "\n";
    os << "  x_q    = " << to_decimal(r.x) << "\n";
  }
  if (r.has_det) os << "  det A  = " << to_decimal(r.det) << "\n";
  if (r.has_aq) os << "  a_q    = " << r.a << "\n";
  if (r.has_decomp) os << "  c_p    = " << r.c << ", d_p = " << r.d << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

void Summary::absorb(const QReport& r) {
  for (const auto& c : r.checks) {
    switch (c.status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::audit: ++audit; break;
      case CheckStatus::skip: break;
    }
  }
}

nlohmann::ordered_json envelope_json(const nlohmann::ordered_json& config,
                                     const std::vector<QReport>& reports) {
  Summary s;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    s.absorb(r);
  }
  nlohmann::ordered_json out;
  out["config"] = config;
  out["reports"] = arr;
  out["summary"] = {{"pass", std::to_string(s.pass)},
                    {"fail", std::to_string(s.fail)},
                    {"audit", std::to_string(s.audit)}};
  return out;
}

}  // namespace jacsum
