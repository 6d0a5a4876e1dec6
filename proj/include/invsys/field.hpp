#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "invsys/errors.hpp"

namespace invsys {

// The ground field: the rationals (characteristic 0) or a prime field F_p
// with p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  // Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  // 0 selects the rationals, anything else must be a prime.
  static FieldSpec from_characteristic(std::uint32_t characteristic);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  // "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_u32(std::uint32_t n);

// An exact field element. Rationals are kept in lowest terms with positive
// denominator; residues are kept in [0, p).
class Scalar {
 public:
  // Rational zero.
  Scalar() = default;

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_integer(const FieldSpec& field, long long z);
  static Scalar from_integer(const FieldSpec& field, const mpz_class& z);
  // Image of num/den in the field. Throws DivisionByZero when den maps to 0.
  static Scalar from_rational(const FieldSpec& field, const mpq_class& q);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  // Only valid for rational scalars / prime-field scalars respectively.
  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  // lhs - factor * rhs, in place; the hot operation of elimination.
  void sub_mul(const Scalar& factor, const Scalar& rhs);

  friend bool operator==(const Scalar& a, const Scalar& b);

  // "num/den" for rationals (always with a denominator), the residue for F_p.
  std::string to_string() const;
  // Like to_string() but drops a unit denominator.
  std::string to_display_string() const;

 private:
  struct Residue {
    std::uint32_t value = 0;
    std::uint32_t p = 2;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  void require_same_field(const Scalar& other, const char* op) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Named entry points matching the field API.
Scalar scalar_from_integer(const FieldSpec& field, long long z);
Scalar scalar_invert(const FieldSpec& field, const Scalar& s);

// Modular helpers shared by the fast elimination kernels.
namespace modp {
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;  // a, b < 2^31, no overflow
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}
std::uint32_t pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(const mpz_class& z, std::uint32_t p);
}  // namespace modp

}  // namespace invsys
