#include "invsys/field.hpp"

#include <ostream>

namespace invsys {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw InvalidArgument("characteristic " + std::to_string(p) +
                          " is not a prime below 2^31");
  return FieldSpec(p);
}

FieldSpec FieldSpec::from_characteristic(std::uint32_t characteristic) {
  return characteristic == 0 ? rationals() : prime(characteristic);
}

std::string FieldSpec::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

namespace modp {

std::uint32_t pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p, b = base % p;
  while (exp) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p) + ")");
  // Extended Euclid; p < 2^31 so int64 never overflows.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace modp

Scalar Scalar::zero(const FieldSpec& field) { return from_integer(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_integer(field, 1); }

Scalar Scalar::from_integer(const FieldSpec& field, long long z) {
  if (field.is_rational()) return Scalar(mpq_class(static_cast<long>(z)));
  const std::int64_t p = field.characteristic();
  std::int64_t r = z % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), field.characteristic()});
}

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& z) {
  if (field.is_rational()) return Scalar(mpq_class(z));
  return Scalar(Residue{modp::reduce(z, field.characteristic()), field.characteristic()});
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& q) {
  if (field.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = modp::reduce(q.get_den(), p);
  if (den == 0)
    throw DivisionByZero("denominator " + q.get_den().get_str() + " vanishes in " +
                         field.name());
  return Scalar(Residue{modp::mul(modp::reduce(q.get_num(), p), modp::inv(den, p), p), p});
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldSpec(r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("rational() called on a prime-field scalar");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("residue() called on a rational scalar");
}

void Scalar::require_same_field(const Scalar& other, const char* op) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    throw FieldMismatch(std::string("scalar ") + op + " across " + field().name() +
                        " and " + other.field().name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field().name());
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{modp::inv(r->value, r->p), r->p});
  mpq_class q;
  mpq_inv(q.get_mpq_t(), std::get<mpq_class>(value_).get_mpq_t());
  return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs, "addition");
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = modp::add(r->value, std::get<Residue>(rhs.value_).value, r->p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs, "subtraction");
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = modp::sub(r->value, std::get<Residue>(rhs.value_).value, r->p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs, "multiplication");
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = modp::mul(r->value, std::get<Residue>(rhs.value_).value, r->p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs, "division");
  return *this *= rhs.inverse();
}

void Scalar::sub_mul(const Scalar& factor, const Scalar& rhs) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    require_same_field(rhs, "sub_mul");
    const auto p = r->p;
    r->value = modp::sub(
        r->value,
        modp::mul(std::get<Residue>(factor.value_).value, std::get<Residue>(rhs.value_).value, p),
        p);
    return;
  }
  mpq_class t;
  mpq_mul(t.get_mpq_t(), std::get<mpq_class>(factor.value_).get_mpq_t(),
          std::get<mpq_class>(rhs.value_).get_mpq_t());
  std::get<mpq_class>(value_) -= t;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if ((ra == nullptr) != (rb == nullptr)) return false;
  if (ra) return *ra == *rb;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  const auto& q = std::get<mpq_class>(value_);
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_display_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_display_string(); }

Scalar scalar_from_integer(const FieldSpec& field, long long z) {
  return Scalar::from_integer(field, z);
}

Scalar scalar_invert(const FieldSpec& field, const Scalar& s) {
  if (s.field() != field) throw FieldMismatch("scalar does not belong to " + field.name());
  return s.inverse();
}

}  // namespace invsys
