#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msurg/css.hpp"

namespace msurg {

struct NoiseModel {
    std::string kind = "depolarizing";  // or "independent-xz"
    double p = 0.0;
    uint64_t seed = 0;
};

struct McResult {
    double p = 0.0;
    uint64_t seed = 0;
    uint64_t trials = 0;
    uint64_t accepted = 0;
    uint64_t logical_failures = 0;  // among accepted
    double acceptance_rate = 0.0;
    double post_selected_logical_rate = 0.0;
    double ci_low = 0.0, ci_high = 0.0;  // Wilson 95% on the post-selected rate
};

// Error-detection Monte Carlo: sample an iid Pauli error per trial, accept
// iff every check has trivial syndrome, and count an accepted trial as a
// failure iff the residual error anticommutes with a logical representative.
// Per-trial randomness is derived from (seed, trial index), so sharded runs
// merge to identical counts.
McResult run_mc(const CssCode& code, const NoiseModel& model, uint64_t trials,
                uint64_t first_trial = 0);
McResult merge_results(const std::vector<McResult>& shards);

// Exhaustive audit: every weight-<=w error either has a nonzero syndrome or
// acts trivially; returns the number of undetected logical errors (0 means
// the detector catches everything below that weight).
uint64_t undetected_logical_count(const CssCode& code, std::size_t w);

struct SlopeFit {
    double exponent = 0.0;
    double stderr_ = 0.0;
};

// Least-squares slope of log(rate) vs log(p); points with zero failures are
// rejected.
SlopeFit slope_fit(const std::vector<McResult>& results);

std::string mc_csv(const std::vector<McResult>& results);

}  // namespace msurg
