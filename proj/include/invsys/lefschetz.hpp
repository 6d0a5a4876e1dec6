#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsys/inverse_system.hpp"
#include "invsys/poly.hpp"

namespace invsys {

enum class LefschetzMode { kWeak, kStrong };

std::string to_string(LefschetzMode mode);

struct LefschetzSearchStrategy {
  // Random forms tried after x_1 + ... + x_n.
  std::size_t trials = 16;
  std::uint64_t seed = 0x1f2e3d4c5b6a7988ULL;
  // Over F_p, search every form up to scaling when there are at most this many.
  std::size_t exhaustive_limit = 4096;
  // Fixes the form; no search.
  std::optional<Polynomial> ell;
};

// Rank of x ell^k : A_i -> A_{i+k} against the maximal possible rank.
struct RankEntry {
  std::uint64_t i = 0;
  std::uint64_t k = 0;
  std::size_t achieved = 0;
  std::size_t required = 0;

  bool maximal() const noexcept { return achieved == required; }
};

struct LefschetzReport {
  Polynomial ell;
  FieldSpec field;
  LefschetzMode mode = LefschetzMode::kWeak;
  bool wlp = false;
  // Only evaluated in strong mode.
  std::optional<bool> slp;
  // Successes are always certified; failures only after an exhaustive search
  // over a finite field.
  bool certified = false;
  // Ordered by k, then i.
  std::vector<RankEntry> rank_table;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_failure;  // (i, k)
  // Target degree i + k of the first failure.
  std::optional<std::uint64_t> failure_degree;
  // Linear forms evaluated, including x_1 + ... + x_n.
  std::size_t trials = 0;
  HilbertData hilbert;

  // The verdict for the requested mode.
  bool holds() const { return mode == LefschetzMode::kWeak ? wlp : slp.value_or(false); }
  std::size_t total_achieved() const;
};

// Rank of the matrix (x^alpha ell^k x^beta) o F over |alpha| = i,
// |beta| = d - i - k, which equals the rank of x ell^k : A_i -> A_{i+k}.
// Throws DegreeOutOfRange unless i + k <= d and k >= 1.
std::size_t pairing_rank(const Polynomial& F, const Polynomial& ell, std::uint64_t i, std::uint64_t k);

// Rank of x ell^k : (R/I)_i -> (R/I)_{i+k}.
std::size_t ideal_multiplication_rank(const GradedQuotient& A, const Polynomial& ell, std::uint64_t i,
                                      std::uint64_t k);

// Rank tables for one fixed form.
LefschetzReport evaluate_lefschetz(const Polynomial& F, const Polynomial& ell, LefschetzMode mode);
LefschetzReport evaluate_lefschetz(const GradedIdealPresentation& I, const Polynomial& ell,
                                   LefschetzMode mode);

// Search for a Lefschetz element: x_1 + ... + x_n first, then either every
// form up to scaling (small finite fields) or random integer forms drawn from
// {0,1}, [-3,3] and [-99,99]. Returns the first success or the best failure
// by total achieved rank.
LefschetzReport find_lefschetz_element(const Polynomial& F, LefschetzMode mode,
                                       const LefschetzSearchStrategy& strategy = {});
LefschetzReport find_lefschetz_element(const GradedIdealPresentation& I, LefschetzMode mode,
                                       const LefschetzSearchStrategy& strategy = {});

LefschetzReport check_slp(const Polynomial& F, const LefschetzSearchStrategy& strategy = {});
LefschetzReport check_wlp(const Polynomial& F, const LefschetzSearchStrategy& strategy = {});
// Throws NotArtinian.
LefschetzReport check_wlp_from_ideal(const GradedIdealPresentation& I,
                                     const LefschetzSearchStrategy& strategy = {});
LefschetzReport check_slp_from_ideal(const GradedIdealPresentation& I,
                                     const LefschetzSearchStrategy& strategy = {});

}  // namespace invsys
