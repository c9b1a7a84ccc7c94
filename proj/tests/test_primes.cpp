#include <doctest.h>

#include <stdexcept>
#include "jacsum/primes.hpp"

using namespace jacsum;

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(997));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1001));  // 7 * 11 * 13
  CHECK(is_prime(999983));
}

TEST_CASE("odd prime power recognition") {
  auto pp = as_odd_prime_power(27);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 3);
  CHECK(pp->f == 3);
  CHECK(as_odd_prime_power(9)->p == 3);
  CHECK(as_odd_prime_power(7)->f == 1);
  CHECK_FALSE(as_odd_prime_power(1).has_value());
  CHECK_FALSE(as_odd_prime_power(2).has_value());
  CHECK_FALSE(as_odd_prime_power(4).has_value());
  CHECK_FALSE(as_odd_prime_power(15).has_value());
  CHECK_FALSE(as_odd_prime_power(45).has_value());
}

TEST_CASE("odd prime powers in range") {
  auto pps = odd_prime_powers_in(3, 30);
  std::vector<std::int64_t> qs;
  for (const auto& pp : pps) qs.push_back(pp.q);
  CHECK(qs == std::vector<std::int64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
}

TEST_CASE("floor division and residues") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(mod_pos(-1, 5) == 4);
  CHECK(mod_pos(10, 5) == 0);
}

TEST_CASE("modular arithmetic helpers") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(3, 16, 17) == 1);
  CHECK(inverse_mod(4, 7) == 2);
  CHECK(inverse_mod(4, 17) * 4 % 17 == 1);
  CHECK_THROWS_AS(inverse_mod(3, 9), std::invalid_argument);
}
