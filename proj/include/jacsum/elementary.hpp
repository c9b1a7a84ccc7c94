#pragma once

#include <cstdint>
#include <vector>

#include "jacsum/bigint.hpp"
#include "jacsum/cyclotomic.hpp"

namespace jacsum {

// Jacobi symbol (a / m) for odd positive m, via quadratic reciprocity.
int jacobi_symbol(std::int64_t a, std::int64_t m);

struct JenkinsCounts {
  std::int64_t count = 0;  // #{k in (0, m/2) : {ak}_m > m/2}
  std::int64_t k_a = 0;    // sum_{0 < k < m/2} floor(2ak/m)
};

// Both parities equal the Jacobi symbol (a/m); gcd(a, m) = 1 required.
JenkinsCounts jenkins_counts(std::int64_t a, std::int64_t m);

// floor(aj/m) - floor(ai/m) - floor(a(j-i)/m), always 0 or 1 when gcd(a,m)=1
// and 1 <= i < j <= m-1; equals the indicator of {ai}_m > {aj}_m.
int pan_floor_value(std::int64_t a, std::int64_t m, std::int64_t i, std::int64_t j);
bool pan_identity_check(std::int64_t a, std::int64_t m, std::int64_t i, std::int64_t j);

// For q = 3 (mod 4): #{k in (0, n/2) : n/2 < {ak}_{2n} < 3n/2} is even,
// for every 0 < a < q with gcd(a, q-1) = 1.
bool x_parity_lemma(std::int64_t q, std::int64_t a);

struct ResidueClassData {
  std::int64_t counts[4] = {0, 0, 0, 0};  // #X_1(a), ..., #X_4(a)
  // U_1 = {r}, U_2 = {n - r}, U_3 = {r - n}, U_4 = {2n - r} over r = {ak}_{2n},
  // k in X_j(a); together they partition {1, ..., (n-1)/2}.
  std::vector<std::int64_t> u[4];
};

// The interval counts X_j(a) = #{k in (0, n/2) : (j-1)n/2 < {ak}_{2n} < jn/2}
// and the folded residue sets U_j(a).
ResidueClassData x_interval_counts(std::int64_t q, std::int64_t a);

struct ClassNumberRecord {
  std::int64_t p = 0;
  std::int64_t s_l = 0;  // sum_{0 < k < p/4} (k/p)
  std::int64_t s_r = 0;  // sum_{p/4 < k < p/2} (k/p)
  std::int64_t s_w = 0;  // s_l + s_r
  std::int64_t h = 0;    // class number of Q(sqrt(-p))
};

// h(-p) from s_w = (2 - (2/p)) h(-p); also checks s_l = (1 + (2/p))/2 * s_w.
// Requires p = 3 (mod 4), p > 3.
ClassNumberRecord class_number(std::int64_t p);

// Independent oracle: counts reduced primitive positive-definite binary
// quadratic forms of discriminant -p.
std::int64_t class_number_by_forms(std::int64_t p);

// ((p-1)/2)! = (-1)^{(h(-p)+1)/2} (mod p) for p = 3 (mod 4), p > 3.
bool mordell_congruence(std::int64_t p);

// B_p = prod_{0 < k < p/4} binom(2k, k), exact.
Int bp_product(std::int64_t p);

// For p = 1 (mod 4): (B_p/p) = (2/p) = (((p-1)/2)!/p).
bool verify_bp_symbol(std::int64_t p);

struct YzParity {
  std::int64_t y = 0;  // #{k in (0, p/8) : (k/p) = -1}
  std::int64_t z = 0;  // #{k in (p/8, p/4) : (k/p) = 1}
  bool ok = false;
};

// y_p + z_p parity: even when p = 3 (mod 8), = (1+h(-p))/2 (mod 2) when
// p = 7 (mod 8). Requires p = 3 (mod 4), p > 3.
YzParity yz_parity(std::int64_t p);

// binom(n, k) mod p by base-p digit products (Lucas).
std::int64_t lucas_binomial_mod_p(std::int64_t n, std::int64_t k, std::int64_t p);

// J(omega^{-i}, omega^{-j}) = -binom(i+j, i) (mod the prime ideal above p),
// and = 0 (mod the ideal) when i + j >= q; omega is the Teichmueller
// character, realized as the canonical generator chi under the reduction map.
bool cohen_congruence_check(const ReductionMap& map, std::int64_t i, std::int64_t j);

// J(phi, omega^{-k}) = omega^{-k}(4) * J(omega^{-k}, omega^{-k}), exact in
// Z[zeta_{q-1}]; k != 0 (mod q-1).
bool bew_identity_check(const ReductionMap& map, std::int64_t k);

struct Thm13Verdict {
  std::int64_t q = 0, p = 0;
  int f = 0;
  std::int64_t r_mod_p = 0;
  // f > 1, q != 9: p | R_q
  bool ok_divisible = false;
  // q = 9: R = -2 exactly
  bool ok_q9 = false;
  // f = 1: R = (-1)^E (1/4)^{E(E+1)/2} prod_{0<k<n/2} binom(2k,k) (mod p),
  // evaluated under both readings of E (floor(n/2) and the factor count e(q))
  std::int64_t rhs_floor = 0, rhs_e = 0;
  bool ok_reading_floor = false;
  bool ok_reading_e = false;
  // f = 1: (R_p/p) = (-1)^{(p-3)/4} for p = 3 (mod 4), +1 for p = 1 (mod 4)
  bool ok_symbol = false;
  bool ok = false;  // the applicable case's verdict (readings: at least one)
};

Thm13Verdict thm13_congruences(std::int64_t q, const Int& Rq);
Thm13Verdict thm13_congruences(std::int64_t q);  // computes R_q first

}  // namespace jacsum
