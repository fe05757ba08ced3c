#include "fairdea/resample.hpp"

#include <algorithm>
#include <cmath>

#include "fairdea/errors.hpp"
#include "fairdea/rng.hpp"

namespace fairdea {

void ProportionTarget::validate(const std::vector<GroupLabel>& cohort_groups) const {
    if (props.empty()) throw Error(Errc::bad_config, "empty proportion target");
    double sum = 0.0;
    for (const auto& [group, p] : props) {
        if (p <= 0.0 || p >= 1.0)
            throw Error(Errc::bad_config, "proportion for '" + group + "' must lie in (0,1)");
        sum += p;
    }
    if (std::abs(sum - 1.0) > proportion_sum_tolerance)
        throw Error(Errc::bad_config,
                    "proportions sum to " + format_double(sum) + ", expected 1");
    for (const auto& group : cohort_groups)
        if (!props.count(group))
            throw Error(Errc::missing_group, "no target proportion for cohort group '" + group + "'");
}

std::size_t target_total(const std::map<GroupLabel, std::size_t>& counts,
                         const ProportionTarget& target) {
    if (counts.empty()) throw Error(Errc::empty_input, "no group counts");
    std::size_t n = std::numeric_limits<std::size_t>::max();
    for (const auto& [group, p] : target.props) {
        auto it = counts.find(group);
        if (it == counts.end())
            throw Error(Errc::missing_group, "target group '" + group + "' absent from counts");
        if (it->second < 1)
            throw Error(Errc::empty_group, "group '" + group + "' has no records");
        n = std::min(n, static_cast<std::size_t>(
                            std::floor(static_cast<double>(it->second) / p)));
    }
    return n;
}

std::map<GroupLabel, std::size_t> group_quotas(std::size_t n, const ProportionTarget& target) {
    std::map<GroupLabel, std::size_t> quotas;
    for (const auto& [group, p] : target.props)
        quotas[group] = static_cast<std::size_t>(std::floor(static_cast<double>(n) * p));
    return quotas;
}

Cohort resample(const Cohort& cohort, const ProportionTarget& target, std::uint64_t seed) {
    target.validate(cohort.group_set);
    auto counts = group_counts(cohort);
    std::size_t n = target_total(counts, target);
    auto quotas = group_quotas(n, target);

    // per group: seeded shuffle of its record indices, keep the first quota
    std::vector<bool> keep(cohort.records.size(), false);
    for (const auto& group : cohort.group_set) {
        std::size_t quota = quotas.at(group);
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < cohort.records.size(); ++i)
            if (cohort.records[i].group == group) idx.push_back(i);
        if (quota > idx.size())
            throw Error(Errc::quota_exceeds_group,
                        "quota " + std::to_string(quota) + " exceeds group '" + group + "' size " +
                            std::to_string(idx.size()));
        Rng rng(sub_seed(seed, "resample/" + group));
        rng.shuffle(idx);
        for (std::size_t k = 0; k < quota; ++k) keep[idx[k]] = true;
    }

    Cohort out;
    for (std::size_t i = 0; i < cohort.records.size(); ++i)
        if (keep[i]) out.records.push_back(cohort.records[i]);
    for (const auto& group : cohort.group_set)
        if (quotas.at(group) > 0) out.group_set.push_back(group);
    return out;
}

} // namespace fairdea
