#pragma once

#include <cstdint>
#include <vector>

#include "jacsum/characters.hpp"
#include "jacsum/cyclotomic.hpp"
#include "jacsum/finite_field.hpp"

namespace jacsum {

// Dense square matrix of exact integers, row major.
class MatrixZ {
 public:
  explicit MatrixZ(std::size_t n) : n_(n), e_(n * n, 0) {}

  std::size_t size() const { return n_; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t n_;
  std::vector<Int> e_;
};

// A_q = [phi_q(s_i + s_j)] over the canonically ordered nonzero squares.
MatrixZ build_aq(const FqField& field);

// Exact determinant by fraction-free (Bareiss) elimination. Pivoting takes
// the first nonzero entry in each column; an all-zero column short-circuits
// to 0. Every interior division is checked to be exact.
Int det_exact(MatrixZ M);

struct EigenCheck {
  bool ok = true;
  std::size_t row = 0;  // first offending row on failure
};

// Verifies A_q v_k = lambda_k v_k exactly in Z[zeta_{q-1}], where
// v_k = (chi^k(s_1), ..., chi^k(s_n)).
EigenCheck verify_eigenrelation(const FqField& field, const CycloRing& ring, std::int64_t k);

// prod_{k=1..n} lambda_k, extracted as a rational integer; equals det A_q.
// Throws verification_error if the product is not rational.
Int det_eigen_product(const FqField& field, const CycloRing& ring);

// The (p-1) x (p-1) matrix [legendre(i - j, p)] and its exact determinant.
// Observed normalization (checked in the suites): det = p^{(p-3)/2}, and the
// signed Jacobi-sum product (-1)^{(p-1)/2} prod_{k=1}^{p-1} J(phi, chi^k)
// equals the same value.
MatrixZ carlitz_matrix(std::int64_t p);
Int carlitz_determinant(std::int64_t p);
Int carlitz_jacobi_product(const FqField& field, const CycloRing& ring);  // the raw product

// Dense square matrix with entries in Z[zeta_m].
class MatrixCyclo {
 public:
  MatrixCyclo(const CycloRing& ring, std::size_t n);

  std::size_t size() const { return n_; }
  CycloInt& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const CycloInt& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t n_;
  std::vector<CycloInt> e_;
};

// [chi^r(s_i + s_j) + chi^r(s_i - s_j)]; requires q = 3 (mod 4), 1 <= r <= q-2.
MatrixCyclo wu_wang_matrix(const FqField& field, const CycloRing& ring, std::int64_t r);

// Fraction-free determinant over Z[zeta_m]; the ring is an integral domain,
// so the Bareiss divisions are exact (and asserted to be).
CycloInt det_exact_cyclo(MatrixCyclo M);

// prod_{k=0}^{(q-3)/2} J(chi^r, chi^{2k}).
CycloInt wu_wang_product(const FqField& field, const CycloRing& ring, std::int64_t r);

// determinant == product, both exact.
bool wu_wang_check(const FqField& field, const CycloRing& ring, std::int64_t r);

}  // namespace jacsum
