#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "pclab/errors.hpp"

namespace pclab {

// A field element: residue for prime fields, exact rational otherwise.
// Which alternative is active is dictated by the owning Field.
using Scalar = std::variant<uint64_t, mpq_class>;

// GF(p) for prime p < 2^31, or the rationals. Value type; all element
// operations go through the field so mixed-field arithmetic can be rejected.
class Field {
 public:
  static Field prime(uint64_t p);
  static Field rationals();

  bool is_prime_field() const { return prime_; }
  uint64_t modulus() const { return p_; }

  bool operator==(const Field& o) const = default;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  // Accepts "123", "-4" and "num/den" (rational fields reduce to lowest terms).
  Scalar from_string(const std::string& s) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  std::string to_string(const Scalar& a) const;
  std::string describe() const;

 private:
  Field(bool prime, uint64_t p) : prime_(prime), p_(p) {}

  uint64_t r(const Scalar& a) const;
  const mpq_class& q(const Scalar& a) const;

  bool prime_ = true;
  uint64_t p_ = 2;
};

bool is_prime_u64(uint64_t n);

}  // namespace pclab
