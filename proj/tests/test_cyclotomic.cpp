#include <doctest.h>

#include <random>

#include "jacsum/cyclotomic.hpp"

using namespace jacsum;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  // x^16 - 1 divided by Phi_1 Phi_2 Phi_4 Phi_8 leaves x^8 + 1
  CHECK(cyclotomic_polynomial(16) == std::vector<Int>{1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("ring arithmetic basics") {
  CycloRing R16(16);
  CHECK(R16.degree() == 8);
  CycloInt z = R16.zeta(1);
  CycloInt acc = R16.one();
  for (int i = 0; i < 8; ++i) acc = acc * z;
  CHECK(acc == -R16.one());  // zeta_16^8 = -1

  CycloRing R6(6);
  CycloInt a = R6.one() + R6.zeta(1);
  CycloInt b = R6.one() + R6.zeta(5);
  CHECK((a * b).as_rational_integer().value() == 3);  // zeta_6 + zeta_6^5 = 1

  CHECK((a * R6.zero()).is_zero());
}

TEST_CASE("zeta power identities for assorted conductors") {
  for (std::int64_t m : {1, 2, 4, 6, 8, 12, 16, 18, 24, 28}) {
    CycloRing R(m);
    CHECK(R.zeta(m) == R.one());
    CycloInt sum = R.zero();
    for (std::int64_t i = 0; i < m; ++i) sum = sum + R.zeta(i);
    if (m == 1)
      CHECK(sum == R.one());  // the empty geometric identity degenerates at m = 1
    else
      CHECK(sum.is_zero());
  }
}

TEST_CASE("galois action") {
  CycloRing R16(16);
  CycloInt z = R16.zeta(1);
  CHECK(z.galois(1) == z);
  CHECK(z.galois(15) == R16.zeta(15));  // complex conjugation
  CHECK(z.galois(5).galois(3) == R16.zeta(15));
  CHECK_THROWS_AS(z.galois(4), std::invalid_argument);  // gcd(4,16) != 1

  // composition sigma_s . sigma_t = sigma_{st mod m} on a random element
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Int> c(R16.degree());
  for (auto& v : c) v = coeff(rng);
  CycloInt a = R16.from_coeffs(c);
  CHECK(a.galois(3).galois(5) == a.galois(15));
  CHECK(a.galois(7).galois(7) == a.galois(49 % 16));
}

TEST_CASE("galois conjugation is a ring automorphism (randomized)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (std::int64_t m : {6, 16, 18}) {
    CycloRing R(m);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Int> ca(R.degree()), cb(R.degree());
      for (auto& v : ca) v = coeff(rng);
      for (auto& v : cb) v = coeff(rng);
      CycloInt a = R.from_coeffs(ca), b = R.from_coeffs(cb);
      for (std::int64_t t = 1; t < m; ++t) {
        if (gcd_i64(t, m) != 1) continue;
        CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
        CHECK((a + b).galois(t) == a.galois(t) + b.galois(t));
      }
    }
  }
}

TEST_CASE("rational integer extraction") {
  CycloRing R(16);
  CHECK(R.constant(7).as_rational_integer().value() == 7);
  CHECK_FALSE(R.zeta(1).as_rational_integer().has_value());
  CHECK(R.zero().as_rational_integer().value() == 0);
}

TEST_CASE("exact division in the ring") {
  CycloRing R(18);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> ca(R.degree()), cb(R.degree());
    for (auto& v : ca) v = coeff(rng);
    for (auto& v : cb) v = coeff(rng);
    CycloInt a = R.from_coeffs(ca), b = R.from_coeffs(cb);
    if (b.is_zero()) continue;
    CHECK(divide_exact(a * b, b) == a);
  }
  CHECK_THROWS_AS(divide_exact(R.one(), R.constant(2)), verification_error);
  CHECK_THROWS_AS(divide_exact(R.one(), R.zero()), verification_error);
}

TEST_CASE("reduction map and Teichmueller lift") {
  FqField F(3, 2);
  CycloRing R(8);
  ReductionMap map(R, F);

  CHECK(map.reduce(R.zeta(1)) == F.generator());
  CHECK(map.reduce(R.constant(3)) == F.zero());       // kernel contains p
  CHECK(map.reduce(R.zeta(5)) == F.generator_pow(5)); // homomorphism on monomials

  CHECK(map.teichmuller(F.one()) == R.one());
  CHECK(map.teichmuller(F.generator()) == R.zeta(1));
  CHECK_THROWS_AS(map.teichmuller(F.zero()), std::invalid_argument);

  // multiplicativity, exhaustively over F_9
  for (std::int64_t i = 1; i < 9; ++i)
    for (std::int64_t j = 1; j < 9; ++j) {
      FqElement x = F.element(static_cast<std::uint32_t>(i));
      FqElement y = F.element(static_cast<std::uint32_t>(j));
      CHECK(map.reduce(map.teichmuller(x) * map.teichmuller(y)) == x * y);
    }

  CHECK_THROWS_AS(ReductionMap(CycloRing(6), F), std::invalid_argument);
}

TEST_CASE("round trip pi . omega = id on units, q <= 200") {
  for (const auto& pp : odd_prime_powers_in(3, 200)) {
    FqField F(pp.p, pp.f);
    CycloRing R(pp.q - 1);
    ReductionMap map(R, F);
    bool ok = true;
    for (std::int64_t i = 1; i < pp.q; ++i) {
      FqElement x = F.element(static_cast<std::uint32_t>(i));
      if (map.reduce(map.teichmuller(x)) != x) ok = false;
    }
    CHECK(ok);
  }
}

TEST_CASE("reduction is a ring homomorphism (randomized)") {
  FqField F(5, 2);
  CycloRing R(24);
  ReductionMap map(R, F);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Int> ca(R.degree()), cb(R.degree());
    for (auto& v : ca) v = coeff(rng);
    for (auto& v : cb) v = coeff(rng);
    CycloInt a = R.from_coeffs(ca), b = R.from_coeffs(cb);
    CHECK(map.reduce(a * b) == map.reduce(a) * map.reduce(b));
    CHECK(map.reduce(a + b) == map.reduce(a) + map.reduce(b));
  }
}

TEST_CASE("desk-scale bound on the ring") {
  CHECK_THROWS_AS(CycloRing(5000), std::invalid_argument);
}

TEST_CASE("debug printer") {
  CycloRing R(16);
  CycloInt v = R.constant(1) + R.zeta(2).scaled(-2) + R.zeta(6).scaled(2);
  CHECK(v.to_string() == "1 - 2*z^2 + 2*z^6");
  CHECK(R.zero().to_string() == "0");
}
