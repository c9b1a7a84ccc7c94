#pragma once

#include <cstdint>

#include "jacsum/cyclotomic.hpp"
#include "jacsum/finite_field.hpp"

namespace jacsum {

// Multiplicative character chi_q^k of F_q^x, valued in Z[zeta_{q-1}]:
// chi^k(g^j) = zeta^{kj}, chi^k(0) = 0 (the convention extends every
// character, including the trivial one, by 0 at 0).
//
// Exponent n = (q-1)/2 gives the quadratic character phi_q; exponent 1 is
// the Teichmueller character under the canonical reduction map.
class Character {
 public:
  Character(const FqField& field, const CycloRing& ring, std::int64_t exponent);

  const FqField& field() const { return *field_; }
  const CycloRing& ring() const { return *ring_; }
  std::int64_t exponent() const { return k_; }

 private:
  const FqField* field_;
  const CycloRing* ring_;
  std::int64_t k_;  // reduced into [0, q-2]
};

CycloInt character_value(const Character& chi, const FqElement& x);

// J(chi, psi) = sum over x in F_q of chi(x) psi(1-x), exact in Z[zeta_{q-1}].
CycloInt jacobi_sum(const Character& chi, const Character& psi);

// lambda_k = sum over the nonzero squares x of phi_q(1+x) chi^k(x).
// These are the eigenvalues of A_q; 2*lambda_k = (-1)^k (J(phi,chi^k) + J(phi,chi^{-k})).
CycloInt lambda_sum(const FqField& field, const CycloRing& ring, std::int64_t k);

struct RqResult {
  std::int64_t q = 0;
  std::int64_t n = 0;  // (q-1)/2
  std::int64_t e = 0;  // #{k : 0 < k < (q-1)/4}
  Int R;               // the rational integer R_q
  Int x;               // x_q = R_q / 2^e
};

// Number of factors in R_q: e(q) = #{k : 0 < k < (q-1)/4} = ceil((q-1)/4) - 1.
// For q = 1 (mod 4) this is (n-2)/2, one less than floor(n/2); 2^{(n-2)/2}
// is the divisibility the factor count actually guarantees there.
std::int64_t rq_normalization_exponent(std::int64_t q);

// The product over 0 < k < (q-1)/4 of (J(phi,chi^k) + J(phi,chi^{-k})),
// computed from the lambda sums: each factor is (-1)^k * 2 * lambda_k.
CycloInt rq_product_lambda(const FqField& field, const CycloRing& ring);

// Same product from two full Jacobi sums per factor, for the character
// chi^gen_exp (gen_exp coprime to q-1). Kept as an independent oracle and
// for the generator-independence sweep.
CycloInt rq_product_jacobi(const FqField& field, const CycloRing& ring,
                           std::int64_t gen_exp = 1);

// Extracts R_q and x_q, enforcing rationality and divisibility by 2^{e(q)};
// throws verification_error if either fails.
RqResult finalize_rq(std::int64_t q, const CycloInt& product);

RqResult compute_rq(const FqField& field, const CycloRing& ring);
RqResult compute_rq(std::int64_t q);  // convenience, builds field and ring

struct GeneratorIndependence {
  bool ok = true;
  std::int64_t witness = 0;  // an exponent s with R_q(chi^s) != R_q(chi), if any
};

// Recomputes R_q(chi^s) for every s coprime to q-1 and checks all agree.
GeneratorIndependence verify_generator_independence(const FqField& field, const CycloRing& ring);

}  // namespace jacsum
