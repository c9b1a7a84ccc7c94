#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "jacsum/matrices.hpp"

using namespace jacsum;

namespace {

// independent determinant oracle: cofactor expansion, fine for n <= 6
Int det_cofactor(const MatrixZ& M) {
  std::size_t n = M.size();
  if (n == 0) return 1;
  if (n == 1) return M.at(0, 0);
  Int out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (M.at(0, j) == 0) continue;
    MatrixZ minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = M.at(r, c);
      }
    }
    Int term = M.at(0, j) * det_cofactor(minor);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

CycloInt det_cofactor_cyclo(const MatrixCyclo& M, const CycloRing& R) {
  std::size_t n = M.size();
  if (n == 1) return M.at(0, 0);
  CycloInt out = R.zero();
  for (std::size_t j = 0; j < n; ++j) {
    MatrixCyclo minor(R, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = M.at(r, c);
      }
    }
    CycloInt term = M.at(0, j) * det_cofactor_cyclo(minor, R);
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

}  // namespace

TEST_CASE("A_q for small q") {
  {
    FqField F(7, 1);
    MatrixZ A = build_aq(F);
    const int expect[3][3] = {{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(A.at(i, j) == expect[i][j]);
  }
  {
    FqField F(5, 1);
    MatrixZ A = build_aq(F);
    CHECK(A.at(0, 0) == -1);
    CHECK(A.at(0, 1) == 0);  // s_1 + s_2 = 1 + 4 = 0
    CHECK(A.at(1, 0) == 0);
    CHECK(A.at(1, 1) == -1);
  }
  {
    FqField F(3, 1);
    MatrixZ A = build_aq(F);
    CHECK(A.size() == 1);
    CHECK(A.at(0, 0) == -1);
  }
}

TEST_CASE("A_q structure: symmetric, entries in {-1,0,1}, one zero per row iff q = 1 mod 4") {
  for (const auto& pp : odd_prime_powers_in(3, 100)) {
    FqField F(pp.p, pp.f);
    MatrixZ A = build_aq(F);
    std::size_t n = A.size();
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t zeros = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (A.at(i, j) != A.at(j, i)) ok = false;
        if (A.at(i, j) < -1 || A.at(i, j) > 1) ok = false;
        if (A.at(i, j) == 0) ++zeros;
      }
      if (pp.q % 4 == 1 && zeros != 1) ok = false;
      if (pp.q % 4 == 3 && zeros != 0) ok = false;
    }
    CHECK(ok);
  }
}

TEST_CASE("exact determinants of the A_q family") {
  auto det_of = [](std::int64_t p, int f) {
    FqField F(p, f);
    return det_exact(build_aq(F));
  };
  CHECK(det_of(7, 1) == -4);
  CHECK(det_of(5, 1) == 1);
  CHECK(det_of(3, 1) == -1);
  CHECK(det_of(13, 1) == -27);
  CHECK(det_of(3, 2) == -3);
  CHECK(det_of(17, 1) == 441);
  CHECK(det_of(19, 1) == -1024);
  CHECK(det_of(29, 1) == 34445);
  CHECK(det_of(5, 2) == -16875);
  CHECK(det_of(3, 3) == -2985984);
}

TEST_CASE("determinant of the identity and of singular matrices") {
  MatrixZ I(4);
  for (int i = 0; i < 4; ++i) I.at(i, i) = 1;
  CHECK(det_exact(I) == 1);

  MatrixZ Z(3);  // zero column short-circuit
  Z.at(0, 1) = 1;
  Z.at(1, 2) = 1;
  CHECK(det_exact(Z) == 0);

  MatrixZ P(2);  // row swap changes the sign
  P.at(0, 1) = 1;
  P.at(1, 0) = 1;
  CHECK(det_exact(P) == -1);
}

TEST_CASE("Bareiss equals cofactor expansion for n <= 6") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      MatrixZ M(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = entry(rng);
      CHECK(det_exact(M) == det_cofactor(M));
    }
  }
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    FqField F(q, 1);
    MatrixZ A = build_aq(F);
    CHECK(det_exact(A) == det_cofactor(A));
  }
}

TEST_CASE("determinant invariant under simultaneous row/column permutation") {
  std::mt19937 rng(9);
  for (std::int64_t q : {13, 17, 19, 29}) {
    FqField F(q, 1);
    MatrixZ A = build_aq(F);
    std::size_t n = A.size();
    Int base = det_exact(A);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      MatrixZ B(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) B.at(i, j) = A.at(perm[i], perm[j]);
      CHECK(det_exact(B) == base);
    }
  }
}

TEST_CASE("eigen relation A_q v_k = lambda_k v_k") {
  {
    FqField F(7, 1);
    CycloRing R(6);
    CHECK(verify_eigenrelation(F, R, 3).ok);  // k = n, chi^n = phi
  }
  {
    FqField F(17, 1);
    CycloRing R(16);
    CHECK(verify_eigenrelation(F, R, 2).ok);  // lambda_2 = 3
  }
  {
    FqField F(5, 1);
    CycloRing R(4);
    CHECK(verify_eigenrelation(F, R, 2).ok);  // A_5 = -I, v_2 = (1,1)
  }
  FqField F(7, 1);
  CycloRing R(6);
  CHECK_THROWS_AS(verify_eigenrelation(F, R, 0), std::invalid_argument);
}

TEST_CASE("det A_q equals the eigenvalue product") {
  {
    FqField F(7, 1);
    CycloRing R(6);
    CHECK(det_eigen_product(F, R) == -4);
  }
  {
    FqField F(13, 1);
    CycloRing R(12);
    CHECK(det_eigen_product(F, R) == -27);
  }
  {
    FqField F(5, 1);
    CycloRing R(4);
    CHECK(det_eigen_product(F, R) == 1);
  }
}

TEST_CASE("det A_q equals eigenvalue product for all q <= 200") {
  for (const auto& pp : odd_prime_powers_in(3, 200)) {
    FqField F(pp.p, pp.f);
    CycloRing R(pp.q - 1);
    CHECK(det_eigen_product(F, R) == det_exact(build_aq(F)));
  }
}

TEST_CASE("Carlitz determinant") {
  CHECK(carlitz_determinant(3) == 1);
  CHECK(carlitz_determinant(5) == 5);
  CHECK(carlitz_determinant(7) == 49);
  CHECK(carlitz_determinant(11) == 14641);
  CHECK_THROWS_AS(carlitz_determinant(9), std::invalid_argument);

  // the determinant carries no extra sign; the signed Jacobi product matches it
  for (std::int64_t p : {3, 5, 7, 11}) {
    FqField F(p, 1);
    CycloRing R(p - 1);
    Int prod = carlitz_jacobi_product(F, R);
    Int signed_prod = (p - 1) / 2 % 2 == 0 ? prod : Int(-prod);
    CHECK(signed_prod == carlitz_determinant(p));
  }
}

TEST_CASE("cyclotomic determinant equals cofactor oracle") {
  FqField F(7, 1);
  CycloRing R(6);
  for (std::int64_t r = 1; r <= 5; ++r) {
    MatrixCyclo M = wu_wang_matrix(F, R, r);
    CHECK(det_exact_cyclo(M) == det_cofactor_cyclo(M, R));
  }
}

TEST_CASE("Wu-Wang identity") {
  {
    FqField F(7, 1);
    CycloRing R(6);
    for (std::int64_t r = 1; r <= 5; ++r) CHECK(wu_wang_check(F, R, r));
    CHECK_THROWS_AS(wu_wang_matrix(F, R, 6), std::invalid_argument);  // r = q-1 rejected
    CHECK_THROWS_AS(wu_wang_matrix(F, R, 0), std::invalid_argument);
  }
  {
    FqField F(11, 1);
    CycloRing R(10);
    CHECK(wu_wang_check(F, R, 1));
  }
  {
    FqField F(5, 1);  // q = 1 (mod 4) rejected
    CycloRing R(4);
    CHECK_THROWS_AS(wu_wang_matrix(F, R, 1), std::invalid_argument);
  }
}
