#include "jacsum/matrices.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jacsum/elementary.hpp"

namespace jacsum {

void MatrixZ::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < n_; ++j) std::swap(at(a, j), at(b, j));
}

MatrixZ build_aq(const FqField& field) {
  const auto& s = field.squares();
  std::size_t n = s.size();
  MatrixZ A(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A.at(i, j) = field.quadratic_character(s[i] + s[j]);
  return A;
}

Int det_exact(MatrixZ M) {
  std::size_t n = M.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M.at(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && M.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      M.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        M.at(i, j) = div_exact(t, prev);
      }
      M.at(i, k) = 0;
    }
    prev = M.at(k, k);
  }
  Int det = M.at(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

EigenCheck verify_eigenrelation(const FqField& field, const CycloRing& ring, std::int64_t k) {
  std::int64_t n = field.n();
  if (k < 1 || k > n) throw std::invalid_argument("verify_eigenrelation: k must lie in [1, n]");
  const auto& s = field.squares();
  std::int64_t m = field.q() - 1;
  CycloInt lam = lambda_sum(field, ring, k);
  // v_j = zeta^{k * dlog(s_j)}
  std::vector<std::int64_t> vexp(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) vexp[j] = k * field.dlog(s[j]) % m;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<std::int64_t> hist(m, 0);
    for (std::size_t j = 0; j < s.size(); ++j) {
      int w = field.quadratic_character(s[i] + s[j]);
      if (w) hist[vexp[j]] += w;
    }
    CycloInt lhs = ring.zero();
    for (std::int64_t e = 0; e < m; ++e)
      if (hist[e]) lhs = lhs + ring.zeta(e).scaled(hist[e]);
    CycloInt rhs = lam * ring.zeta(vexp[i]);
    if (lhs != rhs) return {false, i};
  }
  return {true, 0};
}

Int det_eigen_product(const FqField& field, const CycloRing& ring) {
  CycloInt acc = ring.one();
  for (std::int64_t k = 1; k <= field.n(); ++k) acc = acc * lambda_sum(field, ring, k);
  auto v = acc.as_rational_integer();
  if (!v)
    throw verification_error("det_eigen_product: prod lambda_k is not rational for q = " +
                             std::to_string(field.q()));
  return *v;
}

MatrixZ carlitz_matrix(std::int64_t p) {
  if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("carlitz_matrix: p must be an odd prime");
  std::size_t n = static_cast<std::size_t>(p - 1);
  MatrixZ M(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M.at(i, j) = jacobi_symbol(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), p);
  return M;
}

Int carlitz_determinant(std::int64_t p) { return det_exact(carlitz_matrix(p)); }

Int carlitz_jacobi_product(const FqField& field, const CycloRing& ring) {
  Character phi(field, ring, field.n());
  CycloInt acc = ring.one();
  // k runs through 1..q-1 inclusive; the k = q-1 factor is J(phi, trivial) = -1
  for (std::int64_t k = 1; k <= field.q() - 1; ++k)
    acc = acc * jacobi_sum(phi, Character(field, ring, k));
  auto v = acc.as_rational_integer();
  if (!v) throw verification_error("carlitz_jacobi_product: product is not rational");
  return *v;
}

MatrixCyclo::MatrixCyclo(const CycloRing& ring, std::size_t n) : n_(n), e_(n * n, ring.zero()) {}

void MatrixCyclo::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < n_; ++j) std::swap(at(a, j), at(b, j));
}

MatrixCyclo wu_wang_matrix(const FqField& field, const CycloRing& ring, std::int64_t r) {
  if (field.q() % 4 != 3)
    throw std::invalid_argument("wu_wang_matrix: requires q = 3 (mod 4)");
  if (r < 1 || r > field.q() - 2)
    throw std::invalid_argument("wu_wang_matrix: r must lie in [1, q-2]");
  const auto& s = field.squares();
  std::int64_t m = field.q() - 1;
  MatrixCyclo M(ring, s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      CycloInt v = ring.zero();
      FqElement a = s[i] + s[j];
      FqElement b = s[i] - s[j];
      if (!a.is_zero()) v = v + ring.zeta(r * field.dlog(a) % m);
      if (!b.is_zero()) v = v + ring.zeta(r * field.dlog(b) % m);
      M.at(i, j) = v;
    }
  }
  return M;
}

CycloInt det_exact_cyclo(MatrixCyclo M) {
  std::size_t n = M.size();
  if (n == 0) throw std::invalid_argument("det_exact_cyclo: empty matrix");
  const CycloRing& R = M.at(0, 0).ring();
  int sign = 1;
  CycloInt prev = R.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M.at(k, k).is_zero()) {
      std::size_t piv = k;
      while (piv < n && M.at(piv, k).is_zero()) ++piv;
      if (piv == n) return R.zero();
      M.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycloInt t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        M.at(i, j) = divide_exact(t, prev);
      }
      M.at(i, k) = R.zero();
    }
    prev = M.at(k, k);
  }
  CycloInt det = M.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

CycloInt wu_wang_product(const FqField& field, const CycloRing& ring, std::int64_t r) {
  if (field.q() % 4 != 3)
    throw std::invalid_argument("wu_wang_product: requires q = 3 (mod 4)");
  if (r < 1 || r > field.q() - 2)
    throw std::invalid_argument("wu_wang_product: r must lie in [1, q-2]");
  Character chi_r(field, ring, r);
  CycloInt acc = ring.one();
  for (std::int64_t k = 0; 2 * k <= field.q() - 3; ++k)
    acc = acc * jacobi_sum(chi_r, Character(field, ring, 2 * k));
  return acc;
}

bool wu_wang_check(const FqField& field, const CycloRing& ring, std::int64_t r) {
  CycloInt lhs = det_exact_cyclo(wu_wang_matrix(field, ring, r));
  return lhs == wu_wang_product(field, ring, r);
}

}  // namespace jacsum
