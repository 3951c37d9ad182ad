#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "kahler/errors.hpp"

namespace kahler {

/// Coefficient field: the rationals (default) or a prime field Z/p.
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field{}; }

  /// Z/p for a prime p.  Throws ValidationError if p is not a prime or does
  /// not fit the supported range (p < 2^32 so products fit in 64 bits).
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for the rationals, p for Z/p.
  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field&) const = default;

  /// "q" or "fp:<p>" — matches the CLI --field syntax.
  std::string to_string() const;

 private:
  std::uint64_t p_ = 0;
};

/// An element of a Field.  Rationals are exact (GMP); Z/p elements are
/// canonical residues in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals()) {}  // 0 in Q

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long n);
  static Scalar from_mpz(const Field& f, const mpz_class& n);
  /// num/den; throws ZeroDivisionError when den vanishes in the field.
  static Scalar from_fraction(const Field& f, const mpz_class& num,
                              const mpz_class& den);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// True for negative rationals; always false over Z/p (residues only).
  bool is_negative() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws ZeroDivisionError
  Scalar inverse() const;                   // throws ZeroDivisionError
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical form: lowest terms "3/2", "-1" over Q; decimal residue mod p.
  std::string to_string() const;

  /// |this| as written (drops a leading minus over Q; identity over Z/p).
  Scalar abs() const;

  /// The rational value; only meaningful over Q.
  const mpq_class& rational() const { return q_; }
  /// The residue; only meaningful over Z/p.
  std::uint64_t residue() const { return r_; }

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;           // used iff field_.is_rationals()
  std::uint64_t r_ = 0;   // used iff field_.is_prime_field()
};

}  // namespace kahler
