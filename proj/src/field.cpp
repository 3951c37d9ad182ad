#include "kahler/field.hpp"

namespace kahler {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32))
    throw ValidationError("modulus too large: " + std::to_string(p) +
                          " (must be below 2^32)");
  if (!is_prime_u64(p))
    throw ValidationError("modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::to_string() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& f, long long n) {
  return from_mpz(f, mpz_class(std::to_string(n)));
}

Scalar Scalar::from_mpz(const Field& f, const mpz_class& n) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.q_ = mpq_class(n);
  } else {
    mpz_class r = n % mpz_class(static_cast<unsigned long>(f.modulus()));
    if (r < 0) r += static_cast<unsigned long>(f.modulus());
    s.r_ = r.get_ui();
  }
  return s;
}

Scalar Scalar::from_fraction(const Field& f, const mpz_class& num,
                             const mpz_class& den) {
  if (den == 0) throw ZeroDivisionError("zero denominator");
  if (f.is_rationals()) {
    Scalar s(f);
    mpq_class q(num, den);
    q.canonicalize();
    s.q_ = q;
    return s;
  }
  return from_mpz(f, num) / from_mpz(f, den);
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1 % field_.modulus();
}

bool Scalar::is_negative() const {
  return field_.is_rationals() && q_ < 0;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw ContextError("field mismatch: " + field_.to_string() + " vs " +
                       o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = r_ + o.r_;
    if (s.r_ >= field_.modulus()) s.r_ -= field_.modulus();
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals())
    s.q_ = q_ * o.q_;
  else
    s.r_ = mod_mul(r_, o.r_, field_.modulus());
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDivisionError("inverse of zero");
  Scalar s(field_);
  if (field_.is_rationals())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, field_.modulus() - 2, field_.modulus());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

Scalar Scalar::abs() const { return is_negative() ? -*this : *this; }

}  // namespace kahler
