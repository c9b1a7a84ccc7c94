#pragma once

#include <cstdint>

#include "jacsum/finite_field.hpp"

namespace jacsum {

struct CurveTrace {
  std::int64_t q = 0;
  std::int64_t a = 0;  // a_q(E) = -sum over F_q of phi_q(x^3 + x)
};

// Frobenius trace of Y^2 = X^3 + X over F_q by direct character summation.
// Sanity-checked against the Hasse bound a^2 <= 4q.
CurveTrace trace_aq(const FqField& field);

struct TwoSquareDecomp {
  std::int64_t p = 0;
  std::int64_t c = 0;  // c = 1 (mod 4)
  std::int64_t d = 0;  // d >= 0
};

// The unique p = c^2 + 4d^2 with c = 1 (mod 4), d >= 0, for primes
// p = 1 (mod 4). Exhaustive search over d.
TwoSquareDecomp decompose(std::int64_t p);

// For p = 1 (mod 4) prime: sum_{0 < x < p/2} phi_p(x^3 + x) = -c_p, and
// a_p = 2 c_p.
bool verify_bew_half_sum(std::int64_t p);

}  // namespace jacsum
