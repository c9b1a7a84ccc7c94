#include "jacsum/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace jacsum {

namespace {

constexpr std::int64_t kRingBound = 4096;

void trim(std::vector<Int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact polynomial division by a monic divisor over Z.
std::vector<Int> divide_exact_poly(std::vector<Int> num, const std::vector<Int>& den) {
  trim(num);
  std::int64_t dd = static_cast<std::int64_t>(den.size()) - 1;
  if (num.empty()) return {};
  if (static_cast<std::int64_t>(num.size()) <= dd)
    throw verification_error("cyclotomic_polynomial: divisor degree exceeds dividend");
  std::vector<Int> quot(num.size() - dd, 0);
  for (std::int64_t i = static_cast<std::int64_t>(num.size()) - 1; i >= dd; --i) {
    Int c = num[i];
    if (c != 0) {
      quot[i - dd] = c;
      for (std::int64_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
  }
  trim(num);
  if (!num.empty()) throw verification_error("cyclotomic_polynomial: inexact division");
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  std::vector<std::vector<Int>> cache;
  for (std::int64_t d : divs) {
    std::vector<Int> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (std::size_t i = 0; i < cache.size(); ++i)
      if (d % divs[i] == 0 && divs[i] < d) poly = divide_exact_poly(std::move(poly), cache[i]);
    cache.push_back(std::move(poly));
  }
  return cache.back();
}

CycloRing::CycloRing(std::int64_t m) : m_(m) {
  if (m < 1) throw std::invalid_argument("CycloRing: conductor must be positive");
  if (m > kRingBound)
    throw std::invalid_argument("CycloRing: conductor exceeds the desk-scale bound " +
                                std::to_string(kRingBound));
  phi_ = cyclotomic_polynomial(m);
  d_ = static_cast<int>(phi_.size()) - 1;
  zeta_pow_.reserve(m);
  std::vector<Int> cur(d_, 0);
  cur[0] = 1;
  zeta_pow_.push_back(cur);
  for (std::int64_t e = 1; e < m; ++e) {
    // multiply by x, reduce mod the monic Phi_m
    Int carry = cur[d_ - 1];
    for (int i = d_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry != 0)
      for (int i = 0; i < d_; ++i) cur[i] -= carry * phi_[i];
    zeta_pow_.push_back(cur);
  }
}

CycloInt CycloRing::zero() const { return {this, std::vector<Int>(d_, 0)}; }

CycloInt CycloRing::constant(Int c) const {
  std::vector<Int> v(d_, 0);
  v[0] = std::move(c);
  return {this, std::move(v)};
}

CycloInt CycloRing::zeta(std::int64_t e) const {
  e = mod_pos(e, m_);
  return {this, zeta_pow_[e]};
}

CycloInt CycloRing::from_coeffs(std::vector<Int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > d_)
    throw std::invalid_argument("CycloRing::from_coeffs: too many coefficients");
  coeffs.resize(d_, 0);
  return {this, std::move(coeffs)};
}

CycloInt::CycloInt(const CycloRing* ring, std::vector<Int> coeffs)
    : ring_(ring), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != ring_->degree())
    throw std::logic_error("CycloInt: coefficient vector has wrong length");
}

const CycloRing& CycloInt::ring() const {
  if (!ring_) throw std::logic_error("CycloInt: default-constructed value has no ring");
  return *ring_;
}

bool CycloInt::is_zero() const {
  for (const Int& v : c_)
    if (v != 0) return false;
  return true;
}

std::optional<Int> CycloInt::as_rational_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_.empty() ? Int(0) : c_[0];
}

CycloInt CycloInt::galois(std::int64_t t) const {
  const CycloRing& R = ring();
  std::int64_t m = R.conductor();
  if (gcd_i64(t, m) != 1)
    throw std::invalid_argument("CycloInt::galois: exponent not coprime to the conductor");
  t = mod_pos(t, m);
  std::vector<Int> out(R.degree(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const std::vector<Int>& row = R.zeta_row((static_cast<std::int64_t>(i) * t) % m);
    for (int j = 0; j < R.degree(); ++j) out[j] += c_[i] * row[j];
  }
  return {&R, std::move(out)};
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("CycloInt: ring mismatch");
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] + o.c_[i];
  return {ring_, std::move(out)};
}

CycloInt CycloInt::operator-(const CycloInt& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("CycloInt: ring mismatch");
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] - o.c_[i];
  return {ring_, std::move(out)};
}

CycloInt CycloInt::operator-() const {
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return {ring_, std::move(out)};
}

CycloInt CycloInt::scaled(const Int& s) const {
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return {ring_, std::move(out)};
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("CycloInt: ring mismatch");
  const CycloRing& R = *ring_;
  int d = R.degree();
  std::int64_t m = R.conductor();
  // schoolbook product, then fold x^e (e >= d) with the zeta-power table;
  // x has order m in the ring, so x^e = x^{e mod m}
  std::vector<Int> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Int> out(prod.begin(), prod.begin() + d);
  for (int e = d; e <= 2 * d - 2; ++e) {
    if (prod[e] == 0) continue;
    const std::vector<Int>& row = R.zeta_row(e % m);
    for (int j = 0; j < d; ++j) out[j] += prod[e] * row[j];
  }
  return {ring_, std::move(out)};
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int v = c_[i];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0)
      os << v.get_str();
    else if (v == 1)
      os << "z^" << i;
    else
      os << v.get_str() << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycloInt divide_exact(const CycloInt& a, const CycloInt& b) {
  const CycloRing& R = a.ring();
  if (&b.ring() != &R) throw std::invalid_argument("divide_exact: ring mismatch");
  if (b.is_zero()) throw verification_error("divide_exact: division by zero");
  std::int64_t m = R.conductor();
  CycloInt num = a;
  CycloInt norm = b;
  for (std::int64_t t = 2; t < m; ++t) {
    if (gcd_i64(t, m) != 1) continue;
    CycloInt conj = b.galois(t);
    num = num * conj;
    norm = norm * conj;
  }
  auto nval = norm.as_rational_integer();
  if (!nval) throw std::logic_error("divide_exact: norm is not rational");
  std::vector<Int> out(num.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = div_exact(num.coeffs()[i], *nval);
  CycloInt quot = R.from_coeffs(std::move(out));
  if (quot * b != a) throw verification_error("divide_exact: inexact division in Z[zeta]");
  return quot;
}

ReductionMap::ReductionMap(const CycloRing& ring, const FqField& field)
    : ring_(&ring), field_(&field) {
  if (ring.conductor() != field.q() - 1)
    throw std::invalid_argument("ReductionMap: conductor must equal q - 1");
}

FqElement ReductionMap::reduce(const CycloInt& a) const {
  if (&a.ring() != ring_) throw std::invalid_argument("ReductionMap: ring mismatch");
  FqElement out = field_->zero();
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t r = mod_i64(c[i], field_->p());
    if (r == 0) continue;
    out = out + field_->from_int(r) * field_->generator_pow(static_cast<std::int64_t>(i));
  }
  return out;
}

CycloInt ReductionMap::teichmuller(const FqElement& x) const {
  if (x.is_zero()) throw std::invalid_argument("teichmuller: undefined at 0");
  return ring_->zeta(field_->dlog(x));
}

}  // namespace jacsum
