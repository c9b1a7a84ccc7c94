#include "jacsum/curves.hpp"

#include <cmath>
#include <stdexcept>

#include "jacsum/elementary.hpp"

namespace jacsum {

CurveTrace trace_aq(const FqField& field) {
  std::int64_t sum = 0;
  for (std::int64_t ix = 0; ix < field.q(); ++ix) {
    FqElement x = field.element(static_cast<std::uint32_t>(ix));
    FqElement v = x * x * x + x;
    sum += field.quadratic_character(v);
  }
  CurveTrace out{field.q(), -sum};
  if (out.a * out.a > 4 * out.q)
    throw verification_error("trace_aq: Hasse bound violated");
  return out;
}

TwoSquareDecomp decompose(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("decompose: p must be prime");
  if (p % 4 != 1) throw std::invalid_argument("decompose: requires p = 1 (mod 4)");
  for (std::int64_t d = 0; 4 * d * d < p; ++d) {
    std::int64_t c2 = p - 4 * d * d;
    std::int64_t c = static_cast<std::int64_t>(std::sqrt(static_cast<double>(c2)));
    while (c * c < c2) ++c;
    while (c * c > c2) --c;
    if (c * c == c2) {
      if (mod_pos(c, 4) != 1) c = -c;
      return {p, c, d};
    }
  }
  throw verification_error("decompose: no representation found");  // cannot happen for p = 1 mod 4
}

bool verify_bew_half_sum(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("verify_bew_half_sum: requires a prime p = 1 (mod 4)");
  TwoSquareDecomp cd = decompose(p);
  std::int64_t half = 0;
  for (std::int64_t x = 1; 2 * x < p; ++x)
    half += jacobi_symbol((x * x % p * x + x) % p, p);
  std::int64_t full = 0;
  for (std::int64_t x = 0; x < p; ++x)
    full += jacobi_symbol((x * x % p * x + x) % p, p);
  std::int64_t a_p = -full;
  return half == -cd.c && a_p == 2 * cd.c;
}

}  // namespace jacsum
