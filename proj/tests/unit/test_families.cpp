#include "doctest.h"
#include "invsys/binomial.hpp"
#include "invsys/families.hpp"
#include "invsys/inverse_system.hpp"
#include "support.hpp"

using namespace invsys;
using testing_support::P;

namespace {

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("monomial family") {
  CHECK(monomial_family({2, 1}) == P("X1^2X2"));
  CHECK(monomial_family({1, 1, 1}) == P("X1X2X3"));
  CHECK(monomial_family({3, 1, 4, 1, 2, 6}) == P("X1^3X2X3^4X4X5^2X6^6"));
  CHECK_THROWS_AS(monomial_family({1, 0}), InvalidArgument);
}

TEST_CASE("sum family") {
  CHECK(sum_family(3, ExponentVector{}) == P("X1^2 + X1X2 + X2^2"));
  CHECK(sum_family(1, {2}) == P("X3^2", {"X1", "X2", "X3"}));
  CHECK(sum_family(2, {1}) == P("(X1 + X2)X3"));
  CHECK_THROWS_AS(sum_family(0, ExponentVector{}), InvalidArgument);
  CHECK_THROWS_AS(sum_family(2, {0}), InvalidArgument);
}

TEST_CASE("tensor duals") {
  const auto F = tensor_dual(P("X1^2", {"X1", "X2"}), P("X2^3", {"X1", "X2"}));
  CHECK(F == P("X1^2X2^3"));
  CHECK(hilbert_function(F).h_vector == convolve({1, 1, 1}, {1, 1, 1, 1}));
  CHECK_THROWS_AS(tensor_dual(P("X1X2"), P("X2^2", {"X1", "X2"})), OverlappingSupport);
  CHECK_THROWS_AS(tensor_dual(P("X1"), P("X1X2")), LengthMismatch);

  const auto shifted = tensor_dual_shifted(P("X1^2 + X1X2 + X2^2"), P("X1"));
  CHECK(shifted == sum_family(3, {1}));

  const auto ex1 = P("X1^3X2X3^4X4X5^2X6^6(X1^2X2X3X4^2X5 - X6^7)");
  const auto big = tensor_dual_shifted(ex1, P("X1^2"));
  CHECK(big.nvars() == 7);
  const auto oracle = is_complete_intersection_oracle(big);
  CHECK(oracle.is_ci);
  CHECK(oracle.ideal.mu() == 7);
}

TEST_CASE("tensor h-vectors convolve") {
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::uint32_t e = 1; e <= 3; ++e) {
      const auto left = sum_family(s, ExponentVector{});
      const auto right = monomial_family({e});
      const auto product = tensor_dual_shifted(left, right);
      CHECK(hilbert_function(product).h_vector ==
            convolve(hilbert_function(left).h_vector, hilbert_function(right).h_vector));
    }
}

TEST_CASE("sum family is a complete intersection") {
  for (std::size_t s = 1; s <= 5; ++s) {
    const auto F = sum_family(s, {2});
    CHECK(is_complete_intersection_oracle(F).is_ci);
  }
}

TEST_CASE("sweep enumeration counts") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::uint32_t max_a = 0; max_a <= 2; ++max_a)
      for (std::uint32_t max_b = 1; max_b <= 2; ++max_b)
        for (bool both : {true, false}) {
          SweepSpec spec{n, max_a, max_b, both, FieldSpec::rationals()};
          const auto expected = naive::sweep_count(static_cast<int>(n), max_a, max_b, both);
          CHECK(BinomialEnumerator(spec).size() == expected);
          if (expected < 5000) CHECK(enumerate_binomials(spec).size() == expected);
        }
}

TEST_CASE("sweep cases are balanced binomials") {
  SweepSpec spec{3, 0, 2, true, FieldSpec::rationals()};
  const auto cases = enumerate_binomials(spec);
  bool saw = false;
  std::size_t duplicates = 0;
  for (const auto& c : cases) {
    CHECK(c.F.term_count() == 2);
    CHECK(c.F.is_homogeneous());
    if (c.duplicate) ++duplicates;
    if (c.F == P("X1X2 - X3^2")) saw = true;
    for (std::size_t i = 0; i < c.index; ++i) CHECK(!(cases[i].F == c.F));
  }
  CHECK(saw);
  // X1^2 - X2X3 mirrors X2X3 - X1^2.
  CHECK(duplicates > 0);
  CHECK_THROWS_AS(BinomialEnumerator(SweepSpec{3, 1, 0, true, FieldSpec::rationals()}), InvalidArgument);
  CHECK_THROWS_AS(BinomialEnumerator(SweepSpec{1, 1, 1, true, FieldSpec::rationals()}), InvalidArgument);
}

TEST_CASE("two-variable binomials are complete intersections") {
  for (const auto& c : enumerate_binomials(SweepSpec{2, 3, 3, true, FieldSpec::rationals()})) {
    if (c.duplicate) continue;
    CHECK(classify(normalize(c.F)).is_ci);
    CHECK(cross_validate(c.F));
  }
}
