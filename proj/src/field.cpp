#include "pclab/field.hpp"

namespace pclab {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(uint64_t p) {
  require(p < (1ULL << 31), "field modulus must be < 2^31");
  require(is_prime_u64(p), "field modulus must be prime, got " + std::to_string(p));
  return Field(true, p);
}

Field Field::rationals() { return Field(false, 0); }

uint64_t Field::r(const Scalar& a) const {
  check_invariant(std::holds_alternative<uint64_t>(a), "scalar/field kind mismatch");
  return std::get<uint64_t>(a);
}

const mpq_class& Field::q(const Scalar& a) const {
  check_invariant(std::holds_alternative<mpq_class>(a), "scalar/field kind mismatch");
  return std::get<mpq_class>(a);
}

Scalar Field::zero() const {
  if (prime_) return Scalar(uint64_t{0});
  return Scalar(mpq_class(0));
}

Scalar Field::one() const {
  if (prime_) return Scalar(uint64_t{1} % p_);
  return Scalar(mpq_class(1));
}

Scalar Field::from_int(long v) const {
  if (prime_) {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    return Scalar(static_cast<uint64_t>(m));
  }
  return Scalar(mpq_class(v));
}

Scalar Field::from_string(const std::string& s) const {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw DomainError("bad scalar literal: " + s);
  v.canonicalize();
  if (!prime_) return Scalar(v);
  // num/den mod p
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = v.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = v.get_den() % pz;
  require(den != 0, "denominator divisible by field modulus: " + s);
  Scalar n(static_cast<uint64_t>(num.get_ui()));
  Scalar d(static_cast<uint64_t>(den.get_ui()));
  return mul(n, inv(d));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (prime_) {
    uint64_t s = r(a) + r(b);
    if (s >= p_) s -= p_;
    return Scalar(s);
  }
  return Scalar(mpq_class(q(a) + q(b)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (prime_) {
    uint64_t x = r(a), y = r(b);
    return Scalar(x >= y ? x - y : x + p_ - y);
  }
  return Scalar(mpq_class(q(a) - q(b)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (prime_) return Scalar((r(a) * r(b)) % p_);
  return Scalar(mpq_class(q(a) * q(b)));
}

Scalar Field::neg(const Scalar& a) const {
  if (prime_) {
    uint64_t x = r(a);
    return Scalar(x == 0 ? 0 : p_ - x);
  }
  return Scalar(mpq_class(-q(a)));
}

Scalar Field::inv(const Scalar& a) const {
  if (prime_) {
    uint64_t x = r(a);
    require(x != 0, "division by zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (x, p)
    int64_t t = 0, newt = 1;
    int64_t rr = static_cast<int64_t>(p_), newr = static_cast<int64_t>(x);
    while (newr != 0) {
      int64_t quo = rr / newr;
      t -= quo * newt;
      std::swap(t, newt);
      rr -= quo * newr;
      std::swap(rr, newr);
    }
    if (t < 0) t += static_cast<int64_t>(p_);
    return Scalar(static_cast<uint64_t>(t));
  }
  require(q(a) != 0, "division by zero in Q");
  return Scalar(mpq_class(1 / q(a)));
}

bool Field::is_zero(const Scalar& a) const {
  if (prime_) return r(a) == 0;
  return q(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (prime_) return r(a) == 1 % p_;
  return q(a) == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  if (prime_) return r(a) == r(b);
  return q(a) == q(b);
}

std::string Field::to_string(const Scalar& a) const {
  if (prime_) return std::to_string(r(a));
  return q(a).get_str();
}

std::string Field::describe() const {
  if (prime_) return "GF(" + std::to_string(p_) + ")";
  return "Q";
}

}  // namespace pclab
