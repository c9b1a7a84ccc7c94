#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace jacsum {

// Deterministic trial-division primality; adequate for the desk-scale
// bound q <= 10^6 enforced by FqField.
bool is_prime(std::int64_t n);

// Prime factorization (p, multiplicity), ascending p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

struct PrimePower {
  std::int64_t q;
  std::int64_t p;
  int f;
};

// q = p^f with p an odd prime, q >= 3; nullopt otherwise.
std::optional<PrimePower> as_odd_prime_power(std::int64_t q);

std::vector<PrimePower> odd_prime_powers_in(std::int64_t lo, std::int64_t hi);

// Positive residue helpers used all over the sweep code.
inline std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

// Modular exponentiation, m > 1.
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace jacsum
