#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invsys/field.hpp"

namespace invsys {

// Exponent tuple indexing both x^alpha in R = K[x_1..x_n] and X^alpha in the
// divided-power module S = K[X_1..X_n]. Ordered lexicographically, so a
// descending container sorts monomials in decreasing lex order.
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0) {}
  ExponentVector(std::initializer_list<value_type> e) : e_(e) {}
  explicit ExponentVector(std::vector<value_type> e) : e_(std::move(e)) {}

  static ExponentVector unit(std::size_t nvars, std::size_t i, value_type power = 1) {
    ExponentVector v(nvars);
    v.e_[i] = power;
    return v;
  }

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  const std::vector<value_type>& values() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  std::uint64_t degree() const;
  // Componentwise alpha <= *this.
  bool divisible_by(const ExponentVector& alpha) const;

  ExponentVector operator+(const ExponentVector& rhs) const;
  ExponentVector operator-(const ExponentVector& rhs) const;  // requires rhs <= *this

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<value_type> e_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);

// x^alpha o X^beta: X^(beta - alpha) when alpha <= beta, nullopt when the
// monomial is annihilated. Throws LengthMismatch on different lengths.
std::optional<ExponentVector> contract_monomial(const ExponentVector& alpha,
                                                const ExponentVector& beta);

// Sparse polynomial over a FieldSpec. Immutable after construction; stored
// coefficients are never zero.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Scalar, std::greater<>>;

  Polynomial() = default;
  Polynomial(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {}
  // Drops zero coefficients; every key must have length nvars and every
  // coefficient must live in `field`.
  Polynomial(FieldSpec field, std::size_t nvars, Terms terms);

  static Polynomial constant(FieldSpec field, std::size_t nvars, const Scalar& c);
  static Polynomial monomial(FieldSpec field, const ExponentVector& e,
                             const Scalar& c);
  static Polynomial monomial(FieldSpec field, const ExponentVector& e);
  static Polynomial variable(FieldSpec field, std::size_t nvars, std::size_t i);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Largest total degree of a term; nullopt for the zero polynomial.
  std::optional<std::uint64_t> degree() const;
  // Zero counts as homogeneous.
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous polynomial; throws otherwise.
  std::uint64_t homogeneous_degree() const;

  Scalar coefficient(const ExponentVector& e) const;
  // Indices of the variables occurring in some term, ascending.
  std::vector<std::size_t> support_variables() const;

  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(std::uint32_t k) const;

  // Moves old variable i to new_index[i] in a ring with new_nvars variables.
  Polynomial remap(std::size_t new_nvars, const std::vector<std::size_t>& new_index) const;
  // Image in another field: rationals map to F_p (denominators must be
  // invertible), identity otherwise. F_p -> QQ is rejected.
  Polynomial to_field(const FieldSpec& target) const;

  std::string to_string(const std::vector<std::string>& names) const;
  // Uses X1..Xn.
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

Polynomial multiply(const Polynomial& f, const Polynomial& g);

// f o F: the bilinear extension of contract_monomial.
Polynomial contract(const Polynomial& f, const Polynomial& F);

// All monomials of one degree in a fixed, decreasing-lex order.
struct GradedBasis {
  std::size_t nvars = 0;
  std::uint64_t degree = 0;
  std::vector<ExponentVector> monomials;

  std::size_t size() const noexcept { return monomials.size(); }
  // Index lookup table, built on demand by the caller.
  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> index() const;
};

GradedBasis monomials_of_degree(std::size_t n, std::uint64_t t);

// Invokes fn(e) for every exponent vector of total degree t in n variables
// with e[i] <= bound[i], in decreasing lex order.
void for_each_bounded_monomial(std::size_t n, std::uint64_t t,
                               const std::vector<std::uint64_t>& bound,
                               const std::function<void(const ExponentVector&)>& fn);

// C(t+n-1, n-1) as an exact count, saturating at SIZE_MAX.
std::size_t count_monomials(std::size_t n, std::uint64_t t);

// X1..Xn (dual side) or x1..xn.
std::vector<std::string> default_variable_names(std::size_t n, bool dual = true);

}  // namespace invsys
