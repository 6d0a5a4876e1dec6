#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsys/inverse_system.hpp"
#include "invsys/poly.hpp"

namespace invsys {

// A variable split off because it carries no surplus exponent: F = X_i^a * F'
// and A_F = K[x_i]/(x_i^(a+1)) (x) A_F'.
struct TensorFactor {
  std::size_t variable = 0;  // original index
  std::uint32_t exponent = 0;
};

// F = lambda * X^a (X_1^b_1 ... X_r^b_r - c X_{r+1}^b_{r+1} ... X_n^b_n) in
// the core variables, with every b_i > 0 and balanced b-degree.
struct BinomialNormalForm {
  FieldSpec field;
  std::size_t original_nvars = 0;
  std::size_t n = 0;
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  std::size_t r = 0;
  // Coefficient of the second monomial after scaling the first to 1, negated.
  Scalar c;
  // Leading coefficient divided out.
  Scalar scale;
  // variable_map[i] = original index of core variable i.
  std::vector<std::size_t> variable_map;
  std::vector<TensorFactor> tensor_factors;

  std::uint64_t degree() const;
  // The core binomial (unit first coefficient) in the core variables.
  Polynomial core_polynomial() const;
  // F itself, rebuilt in the original variables.
  Polynomial original_polynomial() const;
};

enum class ClassificationReason {
  kCompleteIntersection,
  // Neither monomial block consists of a single variable.
  kRTooSmall,
  kNoIndexSatisfiesALtQB,
  // Two core variables where no orientation meets the criterion; CI anyway
  // because Gorenstein ideals of height two are complete intersections.
  kCodimensionTwo,
};

std::string to_string(ClassificationReason reason);

struct ClassificationReport {
  BinomialNormalForm normal_form;
  bool is_ci = false;
  ClassificationReason reason = ClassificationReason::kRTooSmall;
  // Orientation in which the criterion was evaluated: false keeps the first
  // monomial as the multi-variable block, true swaps the two monomials.
  bool mirrored = false;
  // Core order with the single-variable block last (the criterion's layout).
  std::vector<std::size_t> oriented_order;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> m;
  // 1-based index into oriented_order.
  std::optional<std::size_t> witness_index;
  // Present iff is_ci; in the original variables.
  std::optional<std::vector<Polynomial>> generators;
};

// Throws NotBinomial, NotHomogeneous or DegenerateBinomial.
BinomialNormalForm normalize(const Polynomial& F);

ClassificationReport classify(const BinomialNormalForm& nf);

// Pure powers x_i^(a_i+b_i+1), the mixed generator G, then x_j^(a_j+1) for
// every tensor factor; all in the original variables. Throws NotCI when the
// criterion fails, and Error if some generator does not annihilate F.
std::vector<Polynomial> explicit_generators(const BinomialNormalForm& nf);

struct CrossValidation {
  bool agree = false;
  ClassificationReport report;
  CompleteIntersectionVerdict oracle;
  // Only evaluated for CI verdicts.
  std::optional<bool> generators_match;
};

CrossValidation cross_validate_report(const Polynomial& F);
bool cross_validate(const Polynomial& F);

}  // namespace invsys
