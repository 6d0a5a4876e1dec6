#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "invsys/poly.hpp"

namespace invsys {

// F = X^a; every a_i must be positive.
Polynomial monomial_family(const ExponentVector& a, FieldSpec field = FieldSpec::rationals());

// (X1^(s-1) + X1^(s-2) X2 + ... + X2^(s-1)) * X3^tail_1 * ... in 2 + |tail|
// variables. Throws InvalidArgument for s = 0 or a zero tail exponent.
Polynomial sum_family(std::size_t s, const ExponentVector& tail, FieldSpec field = FieldSpec::rationals());

// F1 * F2 for polynomials in one ring with disjoint variable supports.
// Throws OverlappingSupport.
Polynomial tensor_dual(const Polynomial& F1, const Polynomial& F2);
// F1 * F2 after shifting F2's variables past F1's: a ring with
// F1.nvars() + F2.nvars() variables.
Polynomial tensor_dual_shifted(const Polynomial& F1, const Polynomial& F2);

// Balanced binomials X^a (X^b on the left block - X^b on the rest) in n
// variables: a_i in [0, max_a], b_i in [1, max_b] on the left block, and the
// right block takes every positive split of the left block's degree.
struct SweepSpec {
  std::size_t n = 3;
  std::uint32_t max_a = 1;
  std::uint32_t max_b = 1;
  // false keeps only left blocks at least as large as the right block.
  bool both_orientations = true;
  FieldSpec field = FieldSpec::rationals();
};

struct BinomialCase {
  std::size_t index = 0;  // position in the enumeration
  Polynomial F;
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  std::vector<std::size_t> left;  // variables of the first monomial block
  // The same unordered pair of monomials (i.e. -F) was emitted earlier.
  bool duplicate = false;
};

// Pull-based stream over a SweepSpec. Throws InvalidArgument for n < 2 or
// max_b = 0.
class BinomialEnumerator {
 public:
  explicit BinomialEnumerator(const SweepSpec& spec);

  std::optional<BinomialCase> next();
  // Total number of cases the stream will produce.
  std::size_t size() const noexcept;

 private:
  struct Config {
    std::vector<std::size_t> left;
    std::vector<std::uint32_t> b;
    bool duplicate = false;
  };

  SweepSpec spec_;
  std::vector<Config> configs_;
  std::size_t config_ = 0;
  std::vector<std::uint32_t> a_;
  std::size_t emitted_ = 0;
  std::size_t a_count_ = 1;
};

std::vector<BinomialCase> enumerate_binomials(const SweepSpec& spec);

}  // namespace invsys
