#include "invsys/sweep.hpp"

#include <atomic>
#include <thread>

#include "invsys/binomial.hpp"

namespace invsys {

namespace {

struct Outcome {
  bool is_ci = false;
  std::string reason;
  bool agree = true;
  bool slp_checked = false;
  bool slp_ok = true;
  bool path_checked = false;
  bool path_ok = true;
  std::string detail;
};

Polynomial sum_of_variables(const FieldSpec& field, std::size_t n) {
  Polynomial ell(field, n);
  for (std::size_t i = 0; i < n; ++i) ell = ell + Polynomial::variable(field, n, i);
  return ell;
}

Outcome evaluate_case(const BinomialCase& c, const SweepOptions& options) {
  Outcome out;
  try {
    const CrossValidation cv = cross_validate_report(c.F);
    out.is_ci = cv.report.is_ci;
    out.reason = to_string(cv.report.reason);
    out.agree = cv.agree;
    if (!cv.agree)
      out.detail = "classifier says " + std::string(cv.report.is_ci ? "CI" : "not CI") + ", oracle mu=" +
                   std::to_string(cv.oracle.ideal.mu()) + " codim=" + std::to_string(cv.oracle.codimension) +
                   (cv.generators_match && !*cv.generators_match ? ", generators do not match" : "");
    if (options.slp && out.is_ci) {
      out.slp_checked = true;
      const LefschetzReport r = check_slp(c.F);
      out.slp_ok = r.slp.value_or(false);
      if (!out.slp_ok) out.detail = "no SLP element after " + std::to_string(r.trials) + " forms";
      if (options.spec.n <= 3 && c.F.homogeneous_degree() <= options.path_check_max_degree) {
        out.path_checked = true;
        out.path_ok = pairing_matches_ideal_route(c.F);
        if (!out.path_ok) out.detail = "pairing and ideal routes disagree";
      }
    }
  } catch (const std::exception& e) {
    out.agree = false;
    out.detail = std::string("exception: ") + e.what();
  }
  return out;
}

}  // namespace

bool pairing_matches_ideal_route(const Polynomial& F) {
  const Polynomial ell = sum_of_variables(F.field(), F.nvars());
  const LefschetzReport dual = evaluate_lefschetz(F, ell, LefschetzMode::kStrong);
  const LefschetzReport ideal = evaluate_lefschetz(minimal_generators(F), ell, LefschetzMode::kStrong);
  if (dual.rank_table.size() != ideal.rank_table.size()) return false;
  for (std::size_t e = 0; e < dual.rank_table.size(); ++e) {
    const auto& a = dual.rank_table[e];
    const auto& b = ideal.rank_table[e];
    if (a.i != b.i || a.k != b.k || a.achieved != b.achieved || a.required != b.required) return false;
  }
  return true;
}

SweepSummary run_sweep(const SweepOptions& options) {
  SweepSummary summary;
  std::vector<BinomialCase> cases;
  for (auto& c : enumerate_binomials(options.spec)) {
    ++summary.enumerated;
    if (c.duplicate)
      ++summary.duplicates_skipped;
    else
      cases.push_back(std::move(c));
  }
  summary.cases = cases.size();

  std::vector<Outcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cases.size(); i = next++) outcomes[i] = evaluate_case(cases[i], options);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, cases.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.is_ci) ++summary.ci_count;
    if (!o.reason.empty()) ++summary.reasons[o.reason];
    auto fail = [&](const char* kind) {
      summary.failures.push_back({cases[i].index, cases[i].F.to_string(), kind, o.detail});
    };
    if (!o.agree) {
      ++summary.mismatches;
      fail("mismatch");
    }
    if (o.slp_checked) {
      ++summary.slp_checked;
      if (!o.slp_ok) {
        ++summary.slp_failures;
        fail("slp");
      }
    }
    if (o.path_checked) {
      ++summary.path_checks;
      if (!o.path_ok) {
        ++summary.path_mismatches;
        fail("path");
      }
    }
  }
  return summary;
}

}  // namespace invsys
