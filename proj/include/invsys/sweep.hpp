#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invsys/families.hpp"
#include "invsys/lefschetz.hpp"

namespace invsys {

struct SweepOptions {
  SweepSpec spec;
  // Also run check_slp on every complete intersection.
  bool slp = false;
  // Compare pairing ranks with ideal-route ranks for x_1 + ... + x_n on CI
  // cases with n <= 3 and degree at most this bound (when slp is set).
  std::uint64_t path_check_max_degree = 6;
  std::size_t jobs = 1;
};

struct SweepFailure {
  std::size_t index = 0;
  std::string polynomial;
  // "mismatch", "slp" or "path".
  std::string kind;
  std::string detail;
};

struct SweepSummary {
  std::size_t enumerated = 0;
  std::size_t duplicates_skipped = 0;
  std::size_t cases = 0;
  std::size_t ci_count = 0;
  std::map<std::string, std::size_t> reasons;
  std::size_t mismatches = 0;
  std::size_t slp_checked = 0;
  std::size_t slp_failures = 0;
  std::size_t path_checks = 0;
  std::size_t path_mismatches = 0;
  // In enumeration order.
  std::vector<SweepFailure> failures;

  bool ok() const noexcept { return mismatches == 0 && slp_failures == 0 && path_mismatches == 0; }
};

// Rank tables for ell = x_1 + ... + x_n via the pairing and via the quotient
// by minimal_generators(F); true iff they agree entry by entry.
bool pairing_matches_ideal_route(const Polynomial& F);

// Cross-validates every distinct case of the enumeration. Workers share
// nothing; outcomes are merged in enumeration order.
SweepSummary run_sweep(const SweepOptions& options);

}  // namespace invsys
