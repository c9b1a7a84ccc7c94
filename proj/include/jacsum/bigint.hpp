#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace jacsum {

// Exact arbitrary-precision integer. All determinant / product / character-sum
// arithmetic in this project is done over Int; no floating point anywhere.
using Int = mpz_class;

// Thrown when a computation contradicts an identity the code relies on
// (a product that should be a rational integer is not, an exact division
// leaves a remainder, ...). Distinct from std::invalid_argument so callers
// can tell "bad input" from "identity violated".
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Int int_pow(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient a / d; throws verification_error if d does not divide a.
inline Int div_exact(const Int& a, const Int& d) {
  if (d == 0) throw verification_error("div_exact: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw verification_error("div_exact: inexact division");
  return q;
}

// Integer square root when the argument is a perfect square.
inline std::optional<Int> sqrt_exact(const Int& a) {
  if (a < 0) return std::nullopt;
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Nonnegative residue of v mod m, m > 0 and machine-sized.
inline std::int64_t mod_i64(const Int& v, std::int64_t m) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
}

}  // namespace jacsum
