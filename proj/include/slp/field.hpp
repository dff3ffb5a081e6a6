#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace slp {

/// Thrown when two scalars (or matrices, elements) from different fields meet.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base field: either the rationals or a prime field GF(p) with p < 2^32.
class FieldSpec {
 public:
  enum class Kind { rational, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_prime() const { return kind_ == Kind::prime; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// Deterministic trial-division primality test, valid for n < 2^32.
bool is_prime_u32(std::uint64_t n);

/// Exact element of a FieldSpec. Rationals are kept reduced with a positive
/// denominator; residues live in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& field) { return from_int(field, 0); }
  static Scalar one(const FieldSpec& field) { return from_int(field, 1); }
  static Scalar from_int(const FieldSpec& field, long value);
  static Scalar from_mpz(const FieldSpec& field, const mpz_class& value);
  /// num/den, reduced into the field. Throws std::domain_error on den == 0 or
  /// when den vanishes mod p.
  static Scalar from_ratio(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint64_t value, std::uint64_t p);

  FieldSpec field() const;

  bool is_zero() const;
  bool is_one() const;

  /// Only valid for rational scalars.
  const mpq_class& as_rational() const;
  /// Only valid for residues.
  std::uint64_t as_residue() const;

  Scalar inv() const;
  Scalar pow(unsigned long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Field-aware equality; throws FieldMismatch across fields.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Binomial coefficient; zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Reduces an exact rational into the field. Throws std::domain_error when the
/// denominator is not invertible there.
Scalar to_field(const FieldSpec& field, const mpq_class& q);

}  // namespace slp
