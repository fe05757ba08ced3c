#include "fairdea/synth.hpp"

#include <algorithm>
#include <cmath>

#include "fairdea/errors.hpp"
#include "fairdea/rng.hpp"

namespace fairdea {

namespace {

struct GammaParams {
    double shape, scale;
};

GammaParams gamma_match(double mean, double sd, const std::string& what) {
    if (mean <= 0.0) throw Error(Errc::bad_config, what + ": mean must be > 0");
    if (sd < 0.0) throw Error(Errc::bad_config, what + ": sd must be >= 0");
    double shape = (mean / sd) * (mean / sd);
    double scale = sd * sd / mean;
    return {shape, scale};
}

struct BetaParams {
    double a, b;
};

BetaParams beta_match(double mean, double sd, const std::string& what) {
    if (mean <= 0.0 || mean >= 1.0) throw Error(Errc::bad_config, what + ": mean must be in (0,1)");
    double var = sd * sd;
    if (var >= mean * (1.0 - mean))
        throw Error(Errc::infeasible_moments,
                    what + ": beta moment matching needs sd^2 < mean*(1-mean)");
    double t = mean * (1.0 - mean) / var - 1.0;
    return {mean * t, (1.0 - mean) * t};
}

double draw_positive(Rng& rng, double mean, double sd, const std::string& what) {
    if (sd == 0.0) return mean;
    auto [shape, scale] = gamma_match(mean, sd, what);
    double v = rng.gamma(shape, scale);
    return std::max(v, 1e-9);
}

} // namespace

std::vector<GroupMomentSpec> default_table1_spec() {
    return {
        {"Asian", 818, 1441, 959, 0.452, 0.267, 2065, 1010},
        {"Black", 1691, 1348, 882, 0.416, 0.258, 1970, 985},
        {"Hispanic", 2553, 1353, 929, 0.390, 0.265, 1976, 979},
        {"White", 8403, 1139, 828, 0.396, 0.259, 2120, 971},
    };
}

Cohort generate(const std::vector<GroupMomentSpec>& specs, std::uint64_t seed,
                const SynthOptions& options) {
    if (specs.empty()) throw Error(Errc::empty_input, "no group specs given");
    Cohort cohort;
    for (std::size_t gi = 0; gi < specs.size(); ++gi) {
        const GroupMomentSpec& spec = specs[gi];
        if (spec.count < 1) throw Error(Errc::bad_config, spec.group + ": count must be >= 1");
        // validate up front so errors do not depend on draw order
        if (spec.x2_sd > 0.0) beta_match(spec.x2_mean, spec.x2_sd, spec.group + "/x2");

        Rng rng(sub_seed(seed, "synth/" + spec.group));
        cohort.group_set.push_back(spec.group);
        for (std::size_t i = 0; i < spec.count; ++i) {
            PatientRecord rec;
            rec.id = spec.group + "-" + std::to_string(i);
            rec.group = spec.group;
            rec.x1 = draw_positive(rng, spec.x1_mean, spec.x1_sd, spec.group + "/x1");
            if (spec.x2_sd == 0.0) {
                rec.x2 = spec.x2_mean;
            } else {
                auto [a, b] = beta_match(spec.x2_mean, spec.x2_sd, spec.group + "/x2");
                rec.x2 = std::clamp(rng.beta(a, b), 1e-3, 1.0);
            }
            rec.y1 = draw_positive(rng, spec.y1_mean, spec.y1_sd, spec.group + "/y1");

            if (options.covariates) {
                double gshift = static_cast<double>(gi);
                rec.confounders["age"] =
                    std::clamp(rng.normal(50.0 + gshift, 12.0), 18.0, 80.0);
                rec.confounders["sex"] = rng.bernoulli(0.6);
                rec.confounders["pra"] = 100.0 * rng.beta(1.1 + 0.15 * gshift, 4.0);
                rec.confounders["dialysis"] =
                    rng.bernoulli(std::min(0.42 + 0.05 * gshift, 0.62));
                double pa = 0.34 - 0.02 * gshift;
                double pb = 0.11 + 0.03 * gshift;
                double pab = 0.04;
                double u = rng.uniform();
                rec.confounders["blood_a"] = u < pa ? 1.0 : 0.0;
                rec.confounders["blood_b"] = (u >= pa && u < pa + pb) ? 1.0 : 0.0;
                rec.confounders["blood_ab"] = (u >= pa + pb && u < pa + pb + pab) ? 1.0 : 0.0;
                rec.confounders["region"] = static_cast<double>(1 + rng.uniform_int(11));
                rec.confounders["insurance"] = rng.bernoulli(0.55);
            }
            cohort.records.push_back(std::move(rec));
        }
    }
    return cohort;
}

} // namespace fairdea
