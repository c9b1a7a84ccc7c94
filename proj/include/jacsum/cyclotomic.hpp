#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacsum/bigint.hpp"
#include "jacsum/finite_field.hpp"

namespace jacsum {

// The m-th cyclotomic polynomial over Z, coefficients low to high, monic.
// Computed by exact division of x^m - 1 by the Phi_d of the proper divisors.
std::vector<Int> cyclotomic_polynomial(std::int64_t m);

class CycloRing;

// Exact element of Z[zeta_m], held in canonical reduced form: an integer
// coefficient vector of length deg Phi_m in the power basis 1, z, ..., z^{d-1}.
// Equality is coefficient-vector equality.
class CycloInt {
 public:
  CycloInt() = default;
  CycloInt(const CycloRing* ring, std::vector<Int> coeffs);

  const CycloRing& ring() const;
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const;

  // Constant coefficient when every other coefficient vanishes; "not rational"
  // is an ordinary outcome, not an error.
  std::optional<Int> as_rational_integer() const;

  // The automorphism zeta -> zeta^t, gcd(t, m) = 1.
  CycloInt galois(std::int64_t t) const;

  CycloInt operator+(const CycloInt& o) const;
  CycloInt operator-(const CycloInt& o) const;
  CycloInt operator*(const CycloInt& o) const;
  CycloInt operator-() const;
  CycloInt scaled(const Int& s) const;

  friend bool operator==(const CycloInt& a, const CycloInt& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CycloInt& a, const CycloInt& b) { return !(a == b); }

  std::string to_string() const;  // debug printer, e.g. "1 - 2*z^2 + 2*z^6"

 private:
  const CycloRing* ring_ = nullptr;
  std::vector<Int> c_;
};

// Z[zeta_m] presented as Z[x]/Phi_m(x). Immutable after construction; the
// zeta-power table makes monomial arithmetic O(d).
class CycloRing {
 public:
  // Desk-scale bound m <= 4096: the table is O(m*d) big integers.
  explicit CycloRing(std::int64_t m);

  std::int64_t conductor() const { return m_; }
  int degree() const { return d_; }
  const std::vector<Int>& modulus() const { return phi_; }

  CycloInt zero() const;
  CycloInt one() const { return constant(1); }
  CycloInt constant(Int c) const;
  CycloInt zeta(std::int64_t e) const;  // zeta_m^e, any integer e
  CycloInt from_coeffs(std::vector<Int> coeffs) const;  // length <= d

  // x^e mod Phi_m for e in [0, m); internal building block, exposed for reuse.
  const std::vector<Int>& zeta_row(std::int64_t e) const { return zeta_pow_[e]; }

 private:
  std::int64_t m_;
  std::vector<Int> phi_;
  int d_;
  std::vector<std::vector<Int>> zeta_pow_;

  friend class CycloInt;
};

// Exact quotient a / b in Z[zeta_m]; throws verification_error unless b
// divides a. Implemented by multiplying through the nontrivial conjugates of
// b and dividing by the rational norm, with a multiply-back check.
CycloInt divide_exact(const CycloInt& a, const CycloInt& b);

// The reduction Z[zeta_{q-1}] -> F_q with zeta -> g (the canonical field
// generator), whose kernel is the fixed prime ideal above p. Realizes the
// Teichmueller correspondence: teichmuller is the multiplicative section.
class ReductionMap {
 public:
  ReductionMap(const CycloRing& ring, const FqField& field);

  const CycloRing& ring() const { return *ring_; }
  const FqField& field() const { return *field_; }

  FqElement reduce(const CycloInt& a) const;
  CycloInt teichmuller(const FqElement& x) const;  // x != 0

 private:
  const CycloRing* ring_;
  const FqField* field_;
};

}  // namespace jacsum
