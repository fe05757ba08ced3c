#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fairdea/cohort.hpp"
#include "fairdea/estimators.hpp"

namespace fairdea {

enum class Outcome { x1, x2, y1 };

const char* outcome_name(Outcome outcome);
Outcome outcome_from_name(const std::string& name);

/// Confounder lists used by the study for each outcome (configurable; the
/// synthetic pipeline maps whichever of these columns exist).
const std::vector<std::string>& paper_confounders(Outcome outcome);

struct FoldModels {
    LinearModel outcome_model;                         // E[Z | G, W]
    std::map<GroupLabel, LogisticModel> propensities;  // one-vs-rest P(G=g | W)
};

struct DebiasResult {
    std::vector<double> adjusted;      // V_i * U_i per record, record order
    std::vector<std::size_t> fold_assignment;
    std::vector<FoldModels> per_fold_models;
};

/// Cross-fitted orthogonal adjustment: records are split into k seeded
/// folds; each record's nuisances (outcome regression and own-group
/// one-vs-rest propensity) are fit on the other folds, and the adjusted
/// score is (1 - p_hat_g(W)) * (Z - mu_hat(G, W)).
DebiasResult crossfit_debias(const Cohort& cohort, Outcome outcome,
                             const std::vector<std::string>& confounder_names,
                             std::size_t folds = 5, std::uint64_t seed = 0);

/// Same computation with a caller-supplied fold assignment (values in
/// [0, folds)); used for reproducing externally defined splits.
DebiasResult crossfit_debias_with_folds(const Cohort& cohort, Outcome outcome,
                                        const std::vector<std::string>& confounder_names,
                                        const std::vector<std::size_t>& fold_assignment);

/// Seeded balanced fold assignment (sizes differ by at most one).
std::vector<std::size_t> make_folds(std::size_t n, std::size_t k, std::uint64_t seed);

} // namespace fairdea
