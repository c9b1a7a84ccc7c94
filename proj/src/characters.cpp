#include "jacsum/characters.hpp"

#include <stdexcept>
#include <string>

namespace jacsum {

namespace {

// Accumulate sum_e hist[e] * zeta^e into a canonical CycloInt.
CycloInt from_exponent_histogram(const CycloRing& ring, const std::vector<std::int64_t>& hist) {
  int d = ring.degree();
  std::vector<Int> out(d, 0);
  for (std::size_t e = 0; e < hist.size(); ++e) {
    std::int64_t c = hist[e];
    if (c == 0) continue;
    if (static_cast<int>(e) < d) {
      out[e] += c;  // zeta^e is the plain monomial below the modulus degree
    } else {
      const std::vector<Int>& row = ring.zeta_row(e);
      for (int j = 0; j < d; ++j) out[j] += c * row[j];
    }
  }
  return ring.from_coeffs(std::move(out));
}

}  // namespace

Character::Character(const FqField& field, const CycloRing& ring, std::int64_t exponent)
    : field_(&field), ring_(&ring), k_(mod_pos(exponent, field.q() - 1)) {
  if (ring.conductor() != field.q() - 1)
    throw std::invalid_argument("Character: ring conductor must equal q - 1");
}

CycloInt character_value(const Character& chi, const FqElement& x) {
  const CycloRing& R = chi.ring();
  if (x.is_zero()) return R.zero();
  std::int64_t m = R.conductor();
  return R.zeta(chi.exponent() * chi.field().dlog(x) % m);
}

CycloInt jacobi_sum(const Character& chi, const Character& psi) {
  const FqField& F = chi.field();
  const CycloRing& R = chi.ring();
  if (&psi.field() != &F || &psi.ring() != &R)
    throw std::invalid_argument("jacobi_sum: characters on different structures");
  std::int64_t q = F.q(), m = q - 1;
  std::int64_t i = chi.exponent(), j = psi.exponent();
  std::vector<std::int64_t> hist(m, 0);
  FqElement one = F.one();
  // x = 0 and x = 1 drop out via chi(0) = psi(0) = 0
  for (std::int64_t ix = 1; ix < q; ++ix) {
    FqElement x = F.element(static_cast<std::uint32_t>(ix));
    FqElement y = one - x;
    if (y.is_zero()) continue;
    ++hist[(i * F.dlog(x) + j * F.dlog(y)) % m];
  }
  return from_exponent_histogram(R, hist);
}

CycloInt lambda_sum(const FqField& field, const CycloRing& ring, std::int64_t k) {
  std::int64_t n = field.n();
  if (k < 1 || k > n) throw std::invalid_argument("lambda_sum: k must lie in [1, n]");
  if (ring.conductor() != field.q() - 1)
    throw std::invalid_argument("lambda_sum: ring conductor must equal q - 1");
  std::int64_t m = field.q() - 1;
  std::vector<std::int64_t> hist(m, 0);
  FqElement one = field.one();
  for (const FqElement& s : field.squares()) {
    int w = field.quadratic_character(one + s);
    if (w == 0) continue;
    hist[k * field.dlog(s) % m] += w;
  }
  return from_exponent_histogram(ring, hist);
}

std::int64_t rq_normalization_exponent(std::int64_t q) {
  std::int64_t e = 0;
  for (std::int64_t k = 1; 4 * k < q - 1; ++k) ++e;
  return e;
}

CycloInt rq_product_lambda(const FqField& field, const CycloRing& ring) {
  CycloInt acc = ring.one();
  for (std::int64_t k = 1; 4 * k < field.q() - 1; ++k) {
    CycloInt factor = lambda_sum(field, ring, k).scaled(k % 2 == 0 ? 2 : -2);
    acc = acc * factor;
  }
  return acc;
}

CycloInt rq_product_jacobi(const FqField& field, const CycloRing& ring, std::int64_t gen_exp) {
  std::int64_t m = field.q() - 1;
  if (gcd_i64(gen_exp, m) != 1)
    throw std::invalid_argument("rq_product_jacobi: generator exponent not coprime to q - 1");
  Character phi(field, ring, field.n());
  CycloInt acc = ring.one();
  for (std::int64_t k = 1; 4 * k < field.q() - 1; ++k) {
    CycloInt a = jacobi_sum(phi, Character(field, ring, gen_exp * k));
    CycloInt b = jacobi_sum(phi, Character(field, ring, -gen_exp * k));
    acc = acc * (a + b);
  }
  return acc;
}

RqResult finalize_rq(std::int64_t q, const CycloInt& product) {
  auto rational = product.as_rational_integer();
  if (!rational)
    throw verification_error("R_" + std::to_string(q) +
                             " is not a rational integer: " + product.to_string());
  RqResult out;
  out.q = q;
  out.n = (q - 1) / 2;
  out.e = rq_normalization_exponent(q);
  out.R = *rational;
  Int denom = pow2(static_cast<unsigned long>(out.e));
  if (!divides(denom, out.R))
    throw verification_error("R_" + std::to_string(q) + " = " + to_decimal(out.R) +
                             " is not divisible by 2^" + std::to_string(out.e));
  out.x = div_exact(out.R, denom);
  return out;
}

RqResult compute_rq(const FqField& field, const CycloRing& ring) {
  return finalize_rq(field.q(), rq_product_lambda(field, ring));
}

RqResult compute_rq(std::int64_t q) {
  auto pp = as_odd_prime_power(q);
  if (!pp) throw std::invalid_argument("compute_rq: q must be an odd prime power >= 3");
  FqField field(pp->p, pp->f);
  CycloRing ring(q - 1);
  return compute_rq(field, ring);
}

GeneratorIndependence verify_generator_independence(const FqField& field, const CycloRing& ring) {
  std::int64_t m = field.q() - 1;
  CycloInt reference = rq_product_jacobi(field, ring, 1);
  for (std::int64_t s = 2; s < m; ++s) {
    if (gcd_i64(s, m) != 1) continue;
    if (rq_product_jacobi(field, ring, s) != reference) return {false, s};
  }
  return {true, 0};
}

}  // namespace jacsum
