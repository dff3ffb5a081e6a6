#include "slp/field.hpp"

#include <ostream>

namespace slp {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U)) {
    throw std::invalid_argument("prime field characteristic must be below 2^32, got " +
                                std::to_string(p));
  }
  if (!is_prime_u32(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::prime, p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::from_int(const FieldSpec& field, long value) {
  if (field.is_rational()) return Scalar(mpq_class(value));
  const auto p = field.characteristic();
  const long m = value % static_cast<long>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(p) : m), p});
}

Scalar Scalar::from_mpz(const FieldSpec& field, const mpz_class& value) {
  if (field.is_rational()) return Scalar(mpq_class(value));
  return Scalar(Residue{reduce_mpz(value, field.characteristic()), field.characteristic()});
}

Scalar Scalar::from_ratio(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (field.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  return from_mpz(field, num) / from_mpz(field, den);
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
  return Scalar(Residue{value % p, p});
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldSpec(FieldSpec::Kind::prime, r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->v == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->v == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("scalar is not rational");
}

std::uint64_t Scalar::as_residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->v;
  throw FieldMismatch("scalar is not a residue");
}

void Scalar::check_same_field(const Scalar& o) const {
  if (value_.index() != o.value_.index()) {
    throw FieldMismatch("scalar field mismatch: rational vs residue");
  }
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->p != std::get<Residue>(o.value_).p) {
      throw FieldMismatch("scalar field mismatch: GF(" + std::to_string(r->p) + ") vs GF(" +
                          std::to_string(std::get<Residue>(o.value_).p) + ")");
    }
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{mod_pow(r->v, r->p - 2, r->p), r->p});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar Scalar::pow(unsigned long e) const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{mod_pow(r->v, e, r->p), r->p});
  const auto& q = std::get<mpq_class>(value_);
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return Scalar(std::move(out));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->v += std::get<Residue>(o.value_).v;
    if (r->v >= r->p) r->v -= r->p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto ov = std::get<Residue>(o.value_).v;
    r->v = r->v >= ov ? r->v - ov : r->v + r->p - ov;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->v = r->v * std::get<Residue>(o.value_).v % r->p;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inv();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->v == 0 ? 0 : r->p - r->v, r->p});
  }
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->v == std::get<Scalar::Residue>(b.value_).v;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->v);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Scalar to_field(const FieldSpec& field, const mpq_class& q) {
  if (field.is_rational()) return Scalar::rational(q);
  return Scalar::from_ratio(field, q.get_num(), q.get_den());
}

}  // namespace slp
