#include "jacsum/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jacsum {

namespace {

constexpr std::int64_t kDeskScaleBound = 1'000'000;

// Polynomials over F_p as coefficient vectors, low to high degree.
using PolyP = std::vector<std::int64_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division n / d over F_p, d monic. Returns remainder-is-zero.
bool divide_mod_p(const PolyP& n, const PolyP& d, std::int64_t p, PolyP* quotient) {
  PolyP r = n;
  trim(r);
  std::int64_t dd = static_cast<std::int64_t>(d.size()) - 1;
  PolyP q(r.size() > d.size() - 1 ? r.size() - d.size() + 1 : 0, 0);
  for (std::int64_t i = static_cast<std::int64_t>(r.size()) - 1; i >= dd; --i) {
    std::int64_t c = r[i] % p;
    if (c) {
      q[i - dd] = c;
      for (std::int64_t j = 0; j <= dd; ++j)
        r[i - dd + j] = mod_pos(r[i - dd + j] - c * d[j], p);
    }
  }
  trim(r);
  if (quotient) *quotient = q;
  return r.empty();
}

// Phi_m mod p via the division chain Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d,
// carried out entirely over F_p (every divisor is monic).
PolyP cyclotomic_mod_p(std::int64_t m, std::int64_t p) {
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  std::vector<PolyP> cache;
  for (std::int64_t d : divs) {
    PolyP poly(d + 1, 0);
    poly[0] = p - 1;  // -1 mod p
    poly[d] = 1;
    for (std::size_t i = 0; i + 1 < divs.size() && divs[i] < d; ++i) {
      if (d % divs[i] == 0) {
        PolyP q;
        if (!divide_mod_p(poly, cache[i], p, &q))
          throw std::logic_error("cyclotomic_mod_p: inexact division");
        poly = q;
      }
    }
    cache.push_back(poly);
  }
  return cache.back();
}

}  // namespace

FqField::FqField(std::int64_t p, int f) : p_(p), f_(f) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("FqField: p must be an odd prime");
  if (!is_prime(p)) throw std::invalid_argument("FqField: p = " + std::to_string(p) + " is composite");
  if (f < 1) throw std::invalid_argument("FqField: f must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > kDeskScaleBound)
      throw std::invalid_argument("FqField: q = p^f exceeds the desk-scale bound 10^6");
  }
  q_ = q;

  if (f_ == 1) {
    // Smallest primitive root mod p, via the factored order test.
    auto fac = factorize(p - 1);
    std::int64_t g = 0;
    for (std::int64_t cand = 2; cand < p; ++cand) {
      bool primitive = true;
      for (const auto& [ell, e] : fac) {
        (void)e;
        if (pow_mod(cand, (p - 1) / ell, p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    if (g == 0) throw std::logic_error("FqField: no primitive root found");
    gen_ = static_cast<std::uint32_t>(g);
    pow_.resize(q_ - 1);
    std::int64_t cur = 1;
    for (std::int64_t j = 0; j < q_ - 1; ++j) {
      pow_[j] = static_cast<std::uint32_t>(cur);
      cur = cur * g % p;
    }
  } else {
    std::int64_t m = q_ - 1;
    PolyP phi_m = cyclotomic_mod_p(m, p);
    // Scan monic candidates x^f + a_{f-1} x^{f-1} + ... + a_0 in lexicographic
    // (a_0, ..., a_{f-1}) order; a degree-f divisor of Phi_{q-1} mod p is
    // automatically irreducible because every irreducible factor has degree f.
    std::vector<std::int64_t> digits(f, 0);
    bool found = false;
    while (true) {
      PolyP cand(f + 1, 0);
      for (int i = 0; i < f; ++i) cand[i] = digits[i];
      cand[f] = 1;
      PolyP q_unused;
      if (divide_mod_p(phi_m, cand, p, &q_unused)) {
        modulus_ = cand;
        found = true;
        break;
      }
      int i = f - 1;  // a_{f-1} varies fastest
      while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
    if (!found) throw std::logic_error("FqField: no modulus polynomial found");

    // Powers of the class of x; its index in base-p encoding is p.
    gen_ = static_cast<std::uint32_t>(p);
    pow_.resize(q_ - 1);
    std::vector<std::int64_t> cur(f, 0);
    cur[0] = 1;
    auto encode = [&](const std::vector<std::int64_t>& c) {
      std::int64_t v = 0;
      for (int i = f - 1; i >= 0; --i) v = v * p + c[i];
      return static_cast<std::uint32_t>(v);
    };
    for (std::int64_t j = 0; j < q_ - 1; ++j) {
      pow_[j] = encode(cur);
      // multiply by x and reduce mod the (monic) modulus
      std::int64_t carry = cur[f - 1];
      for (int i = f - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (carry)
        for (int i = 0; i < f; ++i) cur[i] = mod_pos(cur[i] - carry * modulus_[i], p);
    }
  }

  dlog_.assign(q_, -1);
  for (std::int64_t j = 0; j < q_ - 1; ++j) {
    if (dlog_[pow_[j]] != -1)
      throw std::logic_error("FqField: generator has order < q-1");
    dlog_[pow_[j]] = j;
  }

  squares_.reserve((q_ - 1) / 2);
  for (std::int64_t idx = 1; idx < q_; ++idx)
    if (dlog_[idx] >= 0 && dlog_[idx] % 2 == 0)
      squares_.emplace_back(this, static_cast<std::uint32_t>(idx));
}

FqElement FqField::element(std::uint32_t index) const {
  if (index >= q_) throw std::invalid_argument("FqField::element: index out of range");
  return {this, index};
}

FqElement FqField::from_int(std::int64_t c) const {
  return {this, static_cast<std::uint32_t>(mod_pos(c, p_))};
}

void FqField::check_same_field(const FqElement& a) const {
  if (&a.field() != this) throw std::invalid_argument("FqField: element from a different field");
}

std::int64_t FqField::dlog(const FqElement& x) const {
  check_same_field(x);
  if (x.is_zero()) throw std::invalid_argument("FqField::dlog: zero has no discrete log");
  return dlog_[x.index()];
}

FqElement FqField::generator_pow(std::int64_t e) const {
  return {this, pow_[mod_pos(e, q_ - 1)]};
}

FqElement FqField::add(const FqElement& a, const FqElement& b) const {
  check_same_field(a);
  check_same_field(b);
  if (f_ == 1) return {this, static_cast<std::uint32_t>((a.index() + b.index()) % p_)};
  std::int64_t ia = a.index(), ib = b.index(), out = 0, mult = 1;
  for (int i = 0; i < f_; ++i) {
    out += (ia % p_ + ib % p_) % p_ * mult;
    ia /= p_;
    ib /= p_;
    mult *= p_;
  }
  return {this, static_cast<std::uint32_t>(out)};
}

FqElement FqField::neg(const FqElement& a) const {
  check_same_field(a);
  if (f_ == 1) return {this, static_cast<std::uint32_t>((p_ - a.index()) % p_)};
  std::int64_t ia = a.index(), out = 0, mult = 1;
  for (int i = 0; i < f_; ++i) {
    out += (p_ - ia % p_) % p_ * mult;
    ia /= p_;
    mult *= p_;
  }
  return {this, static_cast<std::uint32_t>(out)};
}

FqElement FqField::sub(const FqElement& a, const FqElement& b) const { return add(a, neg(b)); }

FqElement FqField::mul(const FqElement& a, const FqElement& b) const {
  check_same_field(a);
  check_same_field(b);
  if (a.is_zero() || b.is_zero()) return zero();
  return {this, pow_[(dlog_[a.index()] + dlog_[b.index()]) % (q_ - 1)]};
}

int FqField::quadratic_character(const FqElement& x) const {
  check_same_field(x);
  if (x.is_zero()) return 0;
  return dlog_[x.index()] % 2 == 0 ? 1 : -1;
}

const FqField& FqElement::field() const {
  if (!field_) throw std::logic_error("FqElement: default-constructed element has no field");
  return *field_;
}

std::vector<std::uint32_t> FqElement::coeffs() const {
  const FqField& F = field();
  std::vector<std::uint32_t> out(F.f());
  std::int64_t v = index_;
  for (int i = 0; i < F.f(); ++i) {
    out[i] = static_cast<std::uint32_t>(v % F.p());
    v /= F.p();
  }
  return out;
}

FqElement FqElement::operator+(const FqElement& o) const { return field().add(*this, o); }
FqElement FqElement::operator-(const FqElement& o) const { return field().sub(*this, o); }
FqElement FqElement::operator*(const FqElement& o) const { return field().mul(*this, o); }
FqElement FqElement::operator-() const { return field().neg(*this); }

}  // namespace jacsum
