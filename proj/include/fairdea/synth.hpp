#pragma once

#include <cstdint>
#include <vector>

#include "fairdea/cohort.hpp"

namespace fairdea {

/// Per-group targets for the synthetic generator: first two moments of
/// waitlist duration, KDPI and graft lifespan.
struct GroupMomentSpec {
    GroupLabel group;
    std::size_t count = 0;
    double x1_mean = 0, x1_sd = 0;
    double x2_mean = 0, x2_sd = 0;
    double y1_mean = 0, y1_sd = 0;
};

/// The four kidney-exchange groups with the published summary moments.
/// Counts default to the post-resampling sizes (818/1691/2553/8403).
std::vector<GroupMomentSpec> default_table1_spec();

struct SynthOptions {
    /// Also draw recipient covariate columns (age, sex, pra, dialysis,
    /// blood_a/b/ab, region, insurance) so the debiasing and mediation
    /// stages have confounders/mediators to work with.
    bool covariates = false;
};

/// Deterministic synthetic cohort: x1 and y1 from moment-matched gamma
/// distributions, x2 from a moment-matched beta clipped to (0.001, 1].
Cohort generate(const std::vector<GroupMomentSpec>& specs, std::uint64_t seed,
                const SynthOptions& options = {});

} // namespace fairdea
