#pragma once

#include <cstdint>
#include <vector>

#include "jacsum/primes.hpp"

namespace jacsum {

class FqField;

// Element of F_{p^f}, stored as the coefficient vector of its residue
// polynomial read as a base-p integer (for f = 1 this is just the residue).
// Plain value type; all arithmetic dispatches through the owning field.
class FqElement {
 public:
  FqElement() = default;
  FqElement(const FqField* field, std::uint32_t index) : field_(field), index_(index) {}

  std::uint32_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  const FqField& field() const;

  std::vector<std::uint32_t> coeffs() const;  // length f, entries in [0, p)

  friend bool operator==(const FqElement& a, const FqElement& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }
  friend bool operator!=(const FqElement& a, const FqElement& b) { return !(a == b); }

  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator*(const FqElement& o) const;
  FqElement operator-() const;

 private:
  const FqField* field_ = nullptr;
  std::uint32_t index_ = 0;
};

// F_{p^f} with a canonical primitive element and a full discrete-log table.
//
// Canonical choices (they make every report byte-stable across runs):
//   f = 1: generator = smallest positive primitive root mod p.
//   f > 1: modulus = first monic degree-f polynomial, in lexicographic
//          (a_0, ..., a_{f-1}) coefficient order, that divides the
//          (q-1)-th cyclotomic polynomial mod p. Every such divisor is
//          irreducible, and it forces the class of x to be a primitive
//          (q-1)-th root of unity, so generator = class of x.
//
// Immutable after construction; safe to share across threads.
class FqField {
 public:
  // Throws std::invalid_argument unless p is an odd prime, f >= 1,
  // 3 <= p^f <= 10^6 (table-driven construction is O(q) memory).
  FqField(std::int64_t p, int f);

  std::int64_t p() const { return p_; }
  int f() const { return f_; }
  std::int64_t q() const { return q_; }
  std::int64_t n() const { return (q_ - 1) / 2; }

  // Monic modulus as coefficients a_0..a_{f-1}, 1 (low to high); empty for f = 1.
  const std::vector<std::int64_t>& modulus_poly() const { return modulus_; }

  FqElement zero() const { return {this, 0}; }
  FqElement one() const { return {this, 1}; }
  FqElement element(std::uint32_t index) const;
  FqElement generator() const { return {this, gen_}; }

  // Image of a rational integer under Z -> F_q.
  FqElement from_int(std::int64_t c) const;

  std::int64_t dlog(const FqElement& x) const;  // in [0, q-2]; throws on 0
  FqElement generator_pow(std::int64_t e) const;

  FqElement add(const FqElement& a, const FqElement& b) const;
  FqElement sub(const FqElement& a, const FqElement& b) const;
  FqElement neg(const FqElement& a) const;
  FqElement mul(const FqElement& a, const FqElement& b) const;

  // phi_q: +1 on nonzero squares, -1 on nonsquares, 0 at 0.
  int quadratic_character(const FqElement& x) const;

  // The nonzero squares s_1 < s_2 < ... < s_{(q-1)/2} in canonical order
  // (coefficient vector read as a base-p integer).
  const std::vector<FqElement>& squares() const { return squares_; }

 private:
  void check_same_field(const FqElement& a) const;

  std::int64_t p_;
  int f_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  std::uint32_t gen_;
  std::vector<std::uint32_t> pow_;        // g^j, j in [0, q-2]
  std::vector<std::int64_t> dlog_;        // index -> exponent, -1 at 0
  std::vector<FqElement> squares_;

  friend class FqElement;
};

// Standalone spellings used by the verification suites.
inline int quadratic_character(const FqField& field, const FqElement& x) {
  return field.quadratic_character(x);
}
inline const std::vector<FqElement>& squares(const FqField& field) { return field.squares(); }

}  // namespace jacsum
