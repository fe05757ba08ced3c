#pragma once

#include <cstdint>
#include <map>

#include "fairdea/cohort.hpp"

namespace fairdea {

/// Desired population proportions per group. Published census percentages
/// round to a sum slightly off 1 (e.g. 0.061+0.126+0.190+0.624 = 1.001),
/// so validation accepts |sum - 1| <= proportion_sum_tolerance and the
/// proportions are used exactly as given.
struct ProportionTarget {
    std::map<GroupLabel, double> props;

    static constexpr double proportion_sum_tolerance = 5e-3;

    /// Throws bad_config / missing_group when the target cannot apply to
    /// a cohort with the given groups.
    void validate(const std::vector<GroupLabel>& cohort_groups) const;
};

/// Total resampled size n = min_g floor(n_g / p_g).
std::size_t target_total(const std::map<GroupLabel, std::size_t>& counts,
                         const ProportionTarget& target);

/// Per-group quota floor(n * p_g).
std::map<GroupLabel, std::size_t> group_quotas(std::size_t n, const ProportionTarget& target);

/// Stratified without-replacement resampling to the target proportions.
/// Deterministic given seed; per-group draws use group-indexed sub-seeds.
Cohort resample(const Cohort& cohort, const ProportionTarget& target, std::uint64_t seed);

} // namespace fairdea
