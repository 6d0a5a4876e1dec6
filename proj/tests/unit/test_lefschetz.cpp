#include <random>

#include "doctest.h"
#include "invsys/lefschetz.hpp"
#include "invsys/parse.hpp"
#include "support.hpp"

using namespace invsys;
using testing_support::P;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

GradedIdealPresentation ideal(const std::string& src, FieldSpec field = Q) {
  const auto parsed = parse_ideal(src, field);
  return GradedIdealPresentation(field, parsed.variables.size(), parsed.generators);
}

Polynomial sum_of_variables(std::size_t n, FieldSpec field = Q) {
  Polynomial ell(field, n);
  for (std::size_t i = 0; i < n; ++i) ell = ell + Polynomial::variable(field, n, i);
  return ell;
}

const RankEntry* find(const LefschetzReport& r, std::uint64_t i, std::uint64_t k) {
  for (const auto& e : r.rank_table)
    if (e.i == i && e.k == k) return &e;
  return nullptr;
}
}  // namespace

TEST_CASE("pairing ranks") {
  CHECK(pairing_rank(P("X1X2X3"), sum_of_variables(3), 1, 1) == 3);
  CHECK(pairing_rank(P("X1X2X3", F2), sum_of_variables(3, F2), 1, 1) == 2);
  CHECK(pairing_rank(P("X1X2X3"), sum_of_variables(3), 0, 3) == 1);
  CHECK_THROWS_AS(pairing_rank(P("X1X2X3"), sum_of_variables(3), 2, 2), DegreeOutOfRange);
  CHECK_THROWS_AS(pairing_rank(P("X1X2X3"), sum_of_variables(3), 1, 0), DegreeOutOfRange);
}

TEST_CASE("top-degree maps have rank one") {
  const auto F = P("X1^2X2X3 - X1X2^3 + 4X3^4");
  const auto d = F.homogeneous_degree();
  for (std::uint64_t k = 1; k <= d; ++k) CHECK(pairing_rank(F, sum_of_variables(3), d - k, k) == 1);
}

TEST_CASE("pairing ranks agree with the oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 5);
    const auto f = testing_support::random_form(rng, n, d);
    const auto l = testing_support::random_form(rng, n, 1, 3);
    const auto F = testing_support::from_naive(f, n);
    const auto ell = testing_support::from_naive(l, n);
    for (int k = 1; k <= d; ++k)
      for (int i = 0; i + k <= d; ++i) CHECK(pairing_rank(F, ell, i, k) == naive::pairing_rank(f, l, n, d, i, k));
  }
}

TEST_CASE("strong Lefschetz on small algebras") {
  const auto mono = check_slp(P("X1^5"));
  CHECK(mono.slp == true);
  CHECK(mono.wlp);

  const auto quick = check_slp(P("X1^2X2^2"));
  CHECK(quick.holds());
  CHECK(quick.trials == 1);
  CHECK(quick.ell == sum_of_variables(2));
  CHECK(quick.certified);

  const auto triple = check_slp(P("X1X2X3"));
  CHECK(triple.holds());
  REQUIRE(find(triple, 1, 1) != nullptr);
  CHECK(find(triple, 1, 1)->achieved == 3);
}

TEST_CASE("characteristic two") {
  const auto r = check_wlp(P("X1X2X3", F2));
  CHECK_FALSE(r.wlp);
  CHECK(r.certified);
  REQUIRE(r.first_failure.has_value());
  CHECK(*r.first_failure == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(r.failure_degree == 2u);

  const auto I = check_wlp_from_ideal(ideal("x^2; y^2; z^2", F2));
  CHECK_FALSE(I.wlp);
  CHECK(I.certified);
  CHECK(I.trials == 7);
  CHECK(I.failure_degree == 2u);
  REQUIRE(find(I, 1, 1) != nullptr);
  CHECK(find(I, 1, 1)->achieved == 2);
  CHECK(find(I, 1, 1)->required == 3);
}

TEST_CASE("ideal route") {
  CHECK(check_wlp_from_ideal(ideal("x^2; y^2; z^2")).wlp);
  CHECK(check_slp_from_ideal(ideal("x^2; y^2; z^2")).holds());

  const auto I = ideal("x^2; xy; y^3");
  const auto y = Polynomial::variable(Q, 2, 1);
  const auto r = evaluate_lefschetz(I, y, LefschetzMode::kWeak);
  CHECK(r.wlp);
  CHECK(r.hilbert.h_vector == std::vector<std::size_t>{1, 2, 1});
  CHECK_THROWS_AS(check_wlp_from_ideal(ideal("x^2; xy")), NotArtinian);

  // Monomial quotients against the naive rank.
  const GradedQuotient A(ideal("x^2; y^3; z^2; xyz"));
  const auto ell = P("x + 2y - 3z");
  const auto h = A.hilbert_data();
  const std::vector<naive::Mono> gens{{2, 0, 0}, {0, 3, 0}, {0, 0, 2}, {1, 1, 1}};
  for (std::uint64_t i = 0; i + 1 <= h.socle_degree; ++i)
    CHECK(ideal_multiplication_rank(A, ell, i, 1) ==
          naive::monomial_quotient_rank(gens, {1, 2, -3}, static_cast<int>(i), 1000003));
}

TEST_CASE("rank tables are symmetric and bounded") {
  for (const char* src : {"X1^2X2X3 - X1X2^3", "X1^3X2^2 - X2^5", "X1X2X3X4(X1X2 - X3X4)"}) {
    const auto F = P(src);
    const auto r = evaluate_lefschetz(F, sum_of_variables(F.nvars()), LefschetzMode::kStrong);
    const auto d = r.hilbert.socle_degree;
    for (const auto& e : r.rank_table) {
      CHECK(e.achieved <= e.required);
      CHECK(e.required == std::min(r.hilbert.at(e.i), r.hilbert.at(e.i + e.k)));
      const auto* mirror = find(r, d - e.i - e.k, e.k);
      REQUIRE(mirror != nullptr);
      CHECK(mirror->achieved == e.achieved);
      CHECK(e.achieved == pairing_rank(F, sum_of_variables(F.nvars()), e.i, e.k));
    }
  }
}

TEST_CASE("search is deterministic and honours a fixed form") {
  const auto F = P("X1^2X2X3 - X1X2^3");
  const auto a = check_slp(F), b = check_slp(F);
  CHECK(a.ell == b.ell);
  CHECK(a.trials == b.trials);
  LefschetzSearchStrategy fixed;
  fixed.ell = P("x1", {"x1", "x2", "x3"});
  const auto r = find_lefschetz_element(F, LefschetzMode::kStrong, fixed);
  CHECK(r.trials == 1);
  CHECK(r.ell == fixed.ell);
}

TEST_CASE("the first example has the SLP") {
  const auto F = P("X^3*Y*Z^4*T*U^2*V^6*(X^2*Y*Z*T^2*U - V^7)");
  const auto r = check_slp(F);
  CHECK(r.holds());
  CHECK(r.certified);
  CHECK(r.hilbert.socle_degree == 24);
  CHECK(r.hilbert.is_palindromic());
}
