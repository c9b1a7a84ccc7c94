#include "jacsum/elementary.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "jacsum/characters.hpp"

namespace jacsum {

int jacobi_symbol(std::int64_t a, std::int64_t m) {
  if (m <= 0 || m % 2 == 0)
    throw std::invalid_argument("jacobi_symbol: modulus must be odd and positive");
  a = mod_pos(a, m);
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = m % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) t = -t;
    a %= m;
  }
  return m == 1 ? t : 0;
}

JenkinsCounts jenkins_counts(std::int64_t a, std::int64_t m) {
  if (m <= 0 || m % 2 == 0)
    throw std::invalid_argument("jenkins_counts: modulus must be odd and positive");
  if (gcd_i64(a, m) != 1) throw std::invalid_argument("jenkins_counts: gcd(a, m) must be 1");
  // shifting a by m changes each floor(2ak/m) by the even amount 2k and
  // leaves {ak}_m alone, so both parities survive normalization
  a = mod_pos(a, m);
  JenkinsCounts out;
  for (std::int64_t k = 1; 2 * k < m; ++k) {
    std::int64_t r = a * k % m;
    if (2 * r > m) ++out.count;
    out.k_a += 2 * a * k / m;
  }
  return out;
}

int pan_floor_value(std::int64_t a, std::int64_t m, std::int64_t i, std::int64_t j) {
  if (m < 2) throw std::invalid_argument("pan_floor_value: m must exceed 1");
  if (gcd_i64(a, m) != 1) throw std::invalid_argument("pan_floor_value: gcd(a, m) must be 1");
  if (!(1 <= i && i < j && j <= m - 1))
    throw std::invalid_argument("pan_floor_value: need 1 <= i < j <= m-1");
  std::int64_t v = floor_div(a * j, m) - floor_div(a * i, m) - floor_div(a * (j - i), m);
  return static_cast<int>(v);
}

bool pan_identity_check(std::int64_t a, std::int64_t m, std::int64_t i, std::int64_t j) {
  int v = pan_floor_value(a, m, i, j);
  int indicator = mod_pos(a * i, m) > mod_pos(a * j, m) ? 1 : 0;
  return v == indicator;
}

ResidueClassData x_interval_counts(std::int64_t q, std::int64_t a) {
  auto pp = as_odd_prime_power(q);
  if (!pp || q % 4 != 3)
    throw std::invalid_argument("x_interval_counts: q must be a prime power = 3 (mod 4)");
  if (!(0 < a && a < q) || gcd_i64(a, q - 1) != 1)
    throw std::invalid_argument("x_interval_counts: need 0 < a < q with gcd(a, q-1) = 1");
  std::int64_t n = (q - 1) / 2;
  ResidueClassData out;
  for (std::int64_t k = 1; 2 * k < n; ++k) {
    std::int64_t r = a * k % (2 * n);
    // (j-1) n/2 < r < j n/2, compared with doubled endpoints (n is odd, no ties)
    for (int j = 1; j <= 4; ++j) {
      if ((j - 1) * n < 2 * r && 2 * r < j * n) {
        ++out.counts[j - 1];
        std::int64_t folded[] = {r, n - r, r - n, 2 * n - r};
        out.u[j - 1].push_back(folded[j - 1]);
      }
    }
  }
  return out;
}

bool x_parity_lemma(std::int64_t q, std::int64_t a) {
  ResidueClassData d = x_interval_counts(q, a);
  return (d.counts[1] + d.counts[2]) % 2 == 0;
}

ClassNumberRecord class_number(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 3 || p <= 3)
    throw std::invalid_argument("class_number: requires a prime p = 3 (mod 4), p > 3");
  ClassNumberRecord out;
  out.p = p;
  for (std::int64_t k = 1; 4 * k < p; ++k) out.s_l += jacobi_symbol(k, p);
  for (std::int64_t k = p / 4 + 1; 2 * k < p; ++k) out.s_r += jacobi_symbol(k, p);
  out.s_w = out.s_l + out.s_r;
  int two = jacobi_symbol(2, p);
  if (out.s_w % (2 - two) != 0)
    throw verification_error("class_number: s_w not divisible by 2 - (2/p)");
  out.h = out.s_w / (2 - two);
  if (2 * out.s_l != (1 + two) * out.s_w)
    throw verification_error("class_number: s_l identity violated at p = " + std::to_string(p));
  return out;
}

std::int64_t class_number_by_forms(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 3 || p <= 3)
    throw std::invalid_argument("class_number_by_forms: requires a prime p = 3 (mod 4), p > 3");
  // reduced forms a x^2 + b x y + c y^2 of discriminant b^2 - 4ac = -p:
  // -a < b <= a <= c, and b >= 0 when a == c; b odd since -p = 1 (mod 4)
  std::int64_t count = 0;
  for (std::int64_t a = 1; 3 * a * a <= p; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      std::int64_t num = b * b + p;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

bool mordell_congruence(std::int64_t p) {
  ClassNumberRecord rec = class_number(p);
  std::int64_t fact = 1;
  for (std::int64_t k = 2; 2 * k < p + 1; ++k) fact = fact * k % p;
  std::int64_t expect = (rec.h + 1) / 2 % 2 == 0 ? 1 : p - 1;
  return fact == expect;
}

Int bp_product(std::int64_t p) {
  if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("bp_product: p must be an odd prime");
  Int out = 1;
  for (std::int64_t k = 1; 4 * k < p; ++k)
    out *= binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
  return out;
}

bool verify_bp_symbol(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("verify_bp_symbol: requires a prime p = 1 (mod 4)");
  int sb = jacobi_symbol(mod_i64(bp_product(p), p), p);
  int s2 = jacobi_symbol(2, p);
  std::int64_t fact = 1;
  for (std::int64_t k = 2; 2 * k < p + 1; ++k) fact = fact * k % p;
  int sf = jacobi_symbol(fact, p);
  return sb == s2 && s2 == sf;
}

YzParity yz_parity(std::int64_t p) {
  ClassNumberRecord rec = class_number(p);
  YzParity out;
  for (std::int64_t k = 1; 8 * k < p; ++k)
    if (jacobi_symbol(k, p) == -1) ++out.y;
  for (std::int64_t k = p / 8 + 1; 4 * k < p; ++k)
    if (jacobi_symbol(k, p) == 1) ++out.z;
  std::int64_t parity = (out.y + out.z) % 2;
  if (p % 8 == 3)
    out.ok = parity == 0;
  else
    out.ok = parity == (1 + rec.h) / 2 % 2;
  return out;
}

std::int64_t lucas_binomial_mod_p(std::int64_t n, std::int64_t k, std::int64_t p) {
  if (n < 0 || k < 0) throw std::invalid_argument("lucas_binomial_mod_p: negative arguments");
  if (!is_prime(p)) throw std::invalid_argument("lucas_binomial_mod_p: p must be prime");
  if (k > n) return 0;
  std::int64_t out = 1;
  while (n > 0 || k > 0) {
    std::int64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // binom(nd, kd) mod p with nd, kd < p
    std::int64_t num = 1, den = 1;
    for (std::int64_t t = 0; t < kd; ++t) {
      num = num * ((nd - t) % p) % p;
      den = den * ((t + 1) % p) % p;
    }
    out = out * num % p * inverse_mod(den, p) % p;
    n /= p;
    k /= p;
  }
  return out;
}

bool cohen_congruence_check(const ReductionMap& map, std::int64_t i, std::int64_t j) {
  const FqField& F = map.field();
  const CycloRing& R = map.ring();
  std::int64_t q = F.q();
  if (i < 1 || i > q - 2 || j < 1 || j > q - 2)
    throw std::invalid_argument("cohen_congruence_check: indices must lie in [1, q-2]");
  CycloInt J = jacobi_sum(Character(F, R, -i), Character(F, R, -j));
  FqElement lhs = map.reduce(J);
  Int c = binomial(static_cast<unsigned long>(i + j), static_cast<unsigned long>(i));
  FqElement rhs = F.from_int(-mod_i64(c, F.p()));
  if (lhs != rhs) return false;
  if (i + j >= q && !lhs.is_zero()) return false;
  return true;
}

bool bew_identity_check(const ReductionMap& map, std::int64_t k) {
  const FqField& F = map.field();
  const CycloRing& R = map.ring();
  std::int64_t m = F.q() - 1;
  if (mod_pos(k, m) == 0)
    throw std::invalid_argument("bew_identity_check: k = 0 (mod q-1) is excluded");
  Character phi(F, R, F.n());
  Character omega_mk(F, R, -k);
  CycloInt lhs = jacobi_sum(phi, omega_mk);
  CycloInt factor = character_value(omega_mk, F.from_int(4));
  CycloInt rhs = factor * jacobi_sum(omega_mk, omega_mk);
  return lhs == rhs;
}

namespace {

// (-1)^E * 4^{-E(E+1)/2} * prod_{0<k<n/2} binom(2k,k)  (mod p)
std::int64_t thm13_rhs(std::int64_t p, std::int64_t n, std::int64_t E) {
  std::int64_t prod = 1;
  for (std::int64_t k = 1; 2 * k < n; ++k) {
    Int b = binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    prod = prod * mod_i64(b, p) % p;
  }
  std::int64_t inv4 = inverse_mod(4, p);
  std::int64_t r = pow_mod(inv4, E * (E + 1) / 2, p);
  r = r * prod % p;
  if (E % 2 == 1) r = mod_pos(-r, p);
  return r;
}

}  // namespace

Thm13Verdict thm13_congruences(std::int64_t q, const Int& Rq) {
  auto pp = as_odd_prime_power(q);
  if (!pp) throw std::invalid_argument("thm13_congruences: q must be an odd prime power");
  Thm13Verdict v;
  v.q = q;
  v.p = pp->p;
  v.f = pp->f;
  v.r_mod_p = mod_i64(Rq, v.p);
  if (v.f > 1 && q != 9) {
    v.ok_divisible = v.r_mod_p == 0;
    v.ok = v.ok_divisible;
    return v;
  }
  if (q == 9) {
    v.ok_q9 = Rq == -2;
    v.ok = v.ok_q9;
    return v;
  }
  std::int64_t p = v.p, n = (q - 1) / 2;
  v.rhs_floor = thm13_rhs(p, n, n / 2);
  v.rhs_e = thm13_rhs(p, n, rq_normalization_exponent(q));
  v.ok_reading_floor = v.r_mod_p == v.rhs_floor;
  v.ok_reading_e = v.r_mod_p == v.rhs_e;
  int claim = p % 4 == 3 ? ((p - 3) / 4 % 2 == 0 ? 1 : -1) : 1;
  v.ok_symbol = jacobi_symbol(v.r_mod_p, p) == claim;
  v.ok = (v.ok_reading_floor || v.ok_reading_e) && v.ok_symbol;
  return v;
}

Thm13Verdict thm13_congruences(std::int64_t q) {
  return thm13_congruences(q, compute_rq(q).R);
}

}  // namespace jacsum
