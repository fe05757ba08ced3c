#include "fairdea/debias.hpp"

#include <algorithm>
#include <numeric>

#include "fairdea/errors.hpp"
#include "fairdea/rng.hpp"

namespace fairdea {

const char* outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::x1: return "x1";
        case Outcome::x2: return "x2";
        case Outcome::y1: return "y1";
    }
    return "?";
}

Outcome outcome_from_name(const std::string& name) {
    if (name == "x1") return Outcome::x1;
    if (name == "x2") return Outcome::x2;
    if (name == "y1") return Outcome::y1;
    throw Error(Errc::bad_config, "unknown outcome '" + name + "'");
}

const std::vector<std::string>& paper_confounders(Outcome outcome) {
    static const std::vector<std::string> x1 = {"pra",    "blood_a", "blood_b", "blood_ab",
                                                "sex",    "age",     "region",  "insurance"};
    static const std::vector<std::string> x2 = {
        "donor_age",    "donor_height",       "donor_weight",   "donor_cause_of_death",
        "donor_creatinine", "donor_hypertension", "donor_diabetes", "donor_hcv"};
    static const std::vector<std::string> y1 = {"age",       "donor_age", "pra", "sex",
                                                "hla_match", "cold_ischemia", "prior_transplant"};
    switch (outcome) {
        case Outcome::x1: return x1;
        case Outcome::x2: return x2;
        case Outcome::y1: return y1;
    }
    return x1;
}

std::vector<std::size_t> make_folds(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(sub_seed(seed, "folds"));
    rng.shuffle(idx);
    std::vector<std::size_t> fold(n);
    for (std::size_t r = 0; r < n; ++r) fold[idx[r]] = r % k;
    return fold;
}

namespace {

double outcome_value(const PatientRecord& rec, Outcome outcome) {
    switch (outcome) {
        case Outcome::x1: return rec.x1;
        case Outcome::x2: return rec.x2;
        case Outcome::y1: return rec.y1;
    }
    return 0.0;
}

} // namespace

DebiasResult crossfit_debias_with_folds(const Cohort& cohort, Outcome outcome,
                                        const std::vector<std::string>& confounder_names,
                                        const std::vector<std::size_t>& fold_assignment) {
    const std::size_t n = cohort.size();
    if (fold_assignment.size() != n)
        throw Error(Errc::bad_config, "fold assignment size does not match cohort");
    std::size_t k = 0;
    for (std::size_t f : fold_assignment) k = std::max(k, f + 1);
    if (k < 2) throw Error(Errc::bad_config, "need at least 2 folds");

    for (const auto& rec : cohort.records)
        for (const auto& name : confounder_names)
            if (!rec.confounders.count(name))
                throw Error(Errc::missing_column,
                            "record '" + rec.id + "' lacks confounder '" + name + "'");

    const std::size_t nw = confounder_names.size();
    const std::size_t ng = cohort.group_set.size();
    std::map<GroupLabel, std::size_t> group_index;
    for (std::size_t g = 0; g < ng; ++g) group_index[cohort.group_set[g]] = g;

    // design row: confounders, then non-reference group indicators
    auto design_row = [&](const PatientRecord& rec, bool with_groups) {
        Eigen::RowVectorXd row(with_groups ? nw + ng - 1 : nw);
        for (std::size_t j = 0; j < nw; ++j) row[j] = rec.confounders.at(confounder_names[j]);
        if (with_groups) {
            std::size_t gi = group_index.at(rec.group);
            for (std::size_t g = 1; g < ng; ++g) row[nw + g - 1] = (gi == g) ? 1.0 : 0.0;
        }
        return row;
    };

    std::vector<std::string> mu_names = confounder_names;
    for (std::size_t g = 1; g < ng; ++g) mu_names.push_back("group:" + cohort.group_set[g]);

    DebiasResult result;
    result.adjusted.assign(n, 0.0);
    result.fold_assignment = fold_assignment;

    for (std::size_t f = 0; f < k; ++f) {
        std::vector<std::size_t> train;
        std::vector<std::size_t> eval;
        for (std::size_t i = 0; i < n; ++i)
            (fold_assignment[i] == f ? eval : train).push_back(i);
        if (train.empty() || eval.empty())
            throw Error(Errc::fold_too_small, "fold " + std::to_string(f) + " is degenerate");

        std::map<GroupLabel, std::size_t> train_counts;
        for (std::size_t i : train) ++train_counts[cohort.records[i].group];
        for (const auto& group : cohort.group_set)
            if (!train_counts.count(group))
                throw Error(Errc::fold_too_small, "group '" + group +
                                                      "' missing from the training split of fold " +
                                                      std::to_string(f));

        Eigen::MatrixXd Xmu(train.size(), nw + ng - 1);
        Eigen::MatrixXd Xw(train.size(), nw);
        Eigen::VectorXd z(train.size());
        for (std::size_t r = 0; r < train.size(); ++r) {
            const auto& rec = cohort.records[train[r]];
            Xmu.row(r) = design_row(rec, true);
            Xw.row(r) = design_row(rec, false);
            z[r] = outcome_value(rec, outcome);
        }

        FoldModels models;
        models.outcome_model = ols_fit(Xmu, z, mu_names);
        for (const auto& group : cohort.group_set) {
            Eigen::VectorXd ind(train.size());
            for (std::size_t r = 0; r < train.size(); ++r)
                ind[r] = cohort.records[train[r]].group == group ? 1.0 : 0.0;
            if (ind.sum() == 0.0 || ind.sum() == static_cast<double>(train.size()))
                throw Error(Errc::fold_too_small,
                            "propensity for '" + group + "' has a one-class training split");
            models.propensities[group] = logistic_fit(Xw, ind, confounder_names);
        }

        for (std::size_t i : eval) {
            const auto& rec = cohort.records[i];
            double mu = models.outcome_model.predict(design_row(rec, true));
            double u = outcome_value(rec, outcome) - mu;
            double p = models.propensities.at(rec.group).predict_prob(design_row(rec, false));
            result.adjusted[i] = (1.0 - p) * u;
        }
        result.per_fold_models.push_back(std::move(models));
    }
    return result;
}

DebiasResult crossfit_debias(const Cohort& cohort, Outcome outcome,
                             const std::vector<std::string>& confounder_names, std::size_t folds,
                             std::uint64_t seed) {
    if (folds < 2) throw Error(Errc::bad_config, "need at least 2 folds");
    if (cohort.size() < folds)
        throw Error(Errc::fold_too_small, "cohort smaller than fold count");
    auto assignment =
        make_folds(cohort.size(), folds, sub_seed(seed, std::string("debias/") + outcome_name(outcome)));
    return crossfit_debias_with_folds(cohort, outcome, confounder_names, assignment);
}

} // namespace fairdea
