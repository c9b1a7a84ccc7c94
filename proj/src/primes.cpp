#include "jacsum/primes.hpp"

#include <stdexcept>

namespace jacsum {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<PrimePower> as_odd_prime_power(std::int64_t q) {
  if (q < 3 || q % 2 == 0) return std::nullopt;
  auto fac = factorize(q);
  if (fac.size() != 1) return std::nullopt;
  return PrimePower{q, fac[0].first, fac[0].second};
}

std::vector<PrimePower> odd_prime_powers_in(std::int64_t lo, std::int64_t hi) {
  std::vector<PrimePower> out;
  for (std::int64_t q = std::max<std::int64_t>(lo, 3); q <= hi; ++q)
    if (auto pp = as_odd_prime_power(q)) out.push_back(*pp);
  return out;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m <= 1) throw std::invalid_argument("pow_mod: modulus must exceed 1");
  std::int64_t r = 1;
  base = mod_pos(base, m);
  while (exp > 0) {
    if (exp & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % m);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % m);
    exp >>= 1;
  }
  return r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  a = mod_pos(a, m);
  std::int64_t t = 0, new_t = 1, r = m, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return mod_pos(t, m);
}

}  // namespace jacsum
