#pragma once

#include <random>
#include <string>
#include <vector>

#include "invsys/parse.hpp"
#include "invsys/poly.hpp"
#include "oracle/naive.hpp"

namespace testing_support {

inline invsys::Polynomial P(const std::string& src, invsys::FieldSpec field = invsys::FieldSpec::rationals()) {
  return invsys::parse_polynomial(src, field).poly;
}

inline invsys::Polynomial P(const std::string& src, const std::vector<std::string>& vars,
                            invsys::FieldSpec field = invsys::FieldSpec::rationals()) {
  return invsys::parse_polynomial(src, field, vars).poly;
}

inline naive::Mono to_mono(const invsys::ExponentVector& e) { return naive::Mono(e.begin(), e.end()); }

inline invsys::ExponentVector from_mono(const naive::Mono& m) {
  return invsys::ExponentVector(std::vector<std::uint32_t>(m.begin(), m.end()));
}

// Only for rational polynomials.
inline naive::Poly to_naive(const invsys::Polynomial& p) {
  naive::Poly out;
  for (const auto& [e, c] : p.terms()) out[to_mono(e)] = c.rational();
  return out;
}

inline invsys::Polynomial from_naive(const naive::Poly& p, std::size_t n) {
  const auto Q = invsys::FieldSpec::rationals();
  invsys::Polynomial::Terms terms;
  for (const auto& [m, c] : p) terms.emplace(from_mono(m), invsys::Scalar::from_rational(Q, c));
  return invsys::Polynomial(Q, n, std::move(terms));
}

// Random homogeneous form of degree d in n variables with small integer
// coefficients; never zero.
inline naive::Poly random_form(std::mt19937_64& rng, int n, int d, int max_terms = 4) {
  const auto monos = naive::monomials(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> count(1, max_terms);
  naive::Poly p;
  while (p.empty()) {
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      const int c = coef(rng);
      if (c != 0) p = naive::add(p, naive::monomial(monos[pick(rng)], c));
    }
  }
  return p;
}

}  // namespace testing_support
