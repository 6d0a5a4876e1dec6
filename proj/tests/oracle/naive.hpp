#pragma once

// Deliberately slow reference implementations for tests. Nothing here calls
// into the library's elimination, contraction or quotient code.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace naive {

using Mono = std::vector<int>;
// Coefficients are rationals; zero entries are never stored.
using Poly = std::map<Mono, mpq_class>;
using Mat = std::vector<std::vector<mpq_class>>;

Poly monomial(const Mono& e, const mpq_class& c = 1);
Poly add(const Poly& f, const Poly& g);
Poly scale(const Poly& f, const mpq_class& c);
Poly mul(const Poly& f, const Poly& g);
Poly power(const Poly& f, int k);
// x^a o X^b = X^(b-a) when a <= b componentwise.
Poly contract(const Poly& f, const Poly& F);
int degree(const Mono& e);

// Every monomial of degree t in n variables (any order).
std::vector<Mono> monomials(int n, int t);

// Gauss-Jordan over Q on a copy.
std::size_t rank(Mat m);
// Gauss-Jordan over F_p on a copy of an integer matrix.
std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p);
// Null space basis (not normalised).
std::vector<std::vector<mpq_class>> kernel(const Mat& m);

// h_t = rank of the full contraction matrix R_t -> S_{d-t}.
std::vector<std::size_t> hilbert(const Poly& F, int n, int d);
// Number of minimal generators of Ann(F) from dim I_t - dim R_1 I_{t-1},
// using full monomial bases, for t <= d + 1.
std::size_t mu(const Poly& F, int n, int d);
// Generator degrees, ascending, computed the same way.
std::vector<int> generator_degrees(const Poly& F, int n, int d);

// Rank of (x^alpha ell^k x^beta) o F over all monomials alpha, beta of
// degrees i and d - i - k.
std::size_t pairing_rank(const Poly& F, const Poly& ell, int n, int d, int i, int k);

// Monomial ideal quotient: rank of x ell : A_i -> A_{i+1} modulo p, with
// ell given by integer coefficients.
std::size_t monomial_quotient_rank(const std::vector<Mono>& gens, const std::vector<long long>& ell, int i,
                                   long long p);
std::size_t monomial_quotient_dim(const std::vector<Mono>& gens, int n, int t);

// Socle dimension of the Artinian monomial quotient R/(gens).
std::size_t monomial_socle_dim(const std::vector<Mono>& gens, int n, int max_degree);

// Number of balanced binomials a sweep enumerates, by the closed formula
// sum over first blocks L and b_L of C(B - 1, |R| - 1) * (max_a + 1)^n.
std::size_t sweep_count(int n, int max_a, int max_b, bool both_orientations);

}  // namespace naive
