#include "fairdea/dea.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairdea/errors.hpp"
#include "fairdea/simplex.hpp"

namespace fairdea {

DeaInstance::DeaInstance(std::vector<double> inputs, std::vector<double> outputs, std::size_t n,
                         std::size_t p, std::size_t q, std::vector<std::string> ids)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), n_(n), p_(p), q_(q),
      ids_(std::move(ids)) {
    if (n_ < 1 || p_ < 1 || q_ < 1) throw Error(Errc::bad_config, "DEA needs n,p,q >= 1");
    if (inputs_.size() != n_ * p_ || outputs_.size() != n_ * q_)
        throw Error(Errc::bad_config, "DEA matrix sizes do not match n,p,q");
    for (double v : inputs_)
        if (!(v > 0.0) || !std::isfinite(v))
            throw Error(Errc::domain_violation, "DEA inputs must be finite and > 0");
    for (double v : outputs_)
        if (!(v > 0.0) || !std::isfinite(v))
            throw Error(Errc::domain_violation, "DEA outputs must be finite and > 0");
    if (ids_.empty()) {
        ids_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) ids_.push_back("u" + std::to_string(i));
    } else if (ids_.size() != n_) {
        throw Error(Errc::bad_config, "DEA id count does not match n");
    }

    // Weak-dominance filter. Sorting by a dominance-monotone key guarantees
    // any dominator of j is processed before j (ties only for identical
    // units, where the first index is kept).
    std::vector<double> in_mean(p_, 0.0), out_mean(q_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < p_; ++k) in_mean[k] += input(i, k);
        for (std::size_t l = 0; l < q_; ++l) out_mean[l] += output(i, l);
    }
    std::vector<double> key(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < p_; ++k) key[i] += input(i, k) / in_mean[k];
        for (std::size_t l = 0; l < q_; ++l) key[i] -= output(i, l) / out_mean[l];
    }
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

    auto dominates = [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < p_; ++k)
            if (input(a, k) > input(b, k)) return false;
        for (std::size_t l = 0; l < q_; ++l)
            if (output(a, l) < output(b, l)) return false;
        return true;
    };
    for (std::size_t j : order) {
        bool dominated = false;
        for (std::size_t k : candidates_) {
            if (dominates(k, j)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) candidates_.push_back(j);
    }
    std::sort(candidates_.begin(), candidates_.end());
}

bool lp_feasible(const DeaInstance& instance, std::size_t i, double theta) {
    if (!(theta > 0.0)) throw Error(Errc::bad_config, "theta must be > 0");
    const auto& cand = instance.frontier_candidates();
    const std::size_t nc = cand.size();
    const std::size_t p = instance.num_inputs();
    const std::size_t q = instance.num_outputs();
    const std::size_t nvar = nc + p + q; // lambdas, input slacks, output surpluses
    const std::size_t m = p + q + 1;

    std::vector<std::vector<double>> A(m, std::vector<double>(nvar, 0.0));
    std::vector<double> b(m, 0.0);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t c = 0; c < nc; ++c) A[k][c] = instance.input(cand[c], k);
        A[k][nc + k] = 1.0;
        b[k] = theta * instance.input(i, k);
    }
    for (std::size_t l = 0; l < q; ++l) {
        for (std::size_t c = 0; c < nc; ++c) A[p + l][c] = instance.output(cand[c], l);
        A[p + l][nc + p + l] = -1.0;
        b[p + l] = instance.output(i, l) / theta;
    }
    for (std::size_t c = 0; c < nc; ++c) A[m - 1][c] = 1.0;
    b[m - 1] = 1.0;

    // scale rows to unit max-abs so the residual tolerance is meaningful
    for (std::size_t r = 0; r < m; ++r) {
        double scale = std::abs(b[r]);
        for (double v : A[r]) scale = std::max(scale, std::abs(v));
        if (scale > 0.0) {
            for (double& v : A[r]) v /= scale;
            b[r] /= scale;
        }
    }
    return phase1_feasible(A, b).status == LpStatus::feasible;
}

EfficiencyScore hyperbolic_efficiency(const DeaInstance& instance, std::size_t i, double tol) {
    if (i >= instance.n()) throw Error(Errc::bad_config, "unit index out of range");
    if (!(tol > 0.0)) throw Error(Errc::bad_config, "tol must be > 0");
    double lo = 0.0, hi = 1.0; // theta = 1 is always feasible (lambda = e_i)
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (lp_feasible(instance, i, mid))
            hi = mid;
        else
            lo = mid;
    }
    EfficiencyScore score;
    score.theta = hi;
    score.on_frontier = hi >= 1.0 - kFrontierTol;
    score.projected_inputs.resize(instance.num_inputs());
    score.projected_outputs.resize(instance.num_outputs());
    for (std::size_t k = 0; k < instance.num_inputs(); ++k)
        score.projected_inputs[k] = hi * instance.input(i, k);
    for (std::size_t l = 0; l < instance.num_outputs(); ++l)
        score.projected_outputs[l] = instance.output(i, l) / hi;
    return score;
}

EfficiencyBatch efficiency_all(const DeaInstance& instance, double tol) {
    EfficiencyBatch batch;
    batch.scores.reserve(instance.n());
    for (std::size_t i = 0; i < instance.n(); ++i) {
        try {
            batch.scores.push_back(hyperbolic_efficiency(instance, i, tol));
        } catch (const Error& e) {
            batch.scores.push_back(EfficiencyScore{});
            batch.failures.emplace_back(i, e.what());
        }
    }
    return batch;
}

std::vector<FrontierPoint> frontier_plot_data(const DeaInstance& instance,
                                              const std::vector<EfficiencyScore>& scores,
                                              const std::vector<std::string>& groups) {
    if (scores.size() != instance.n())
        throw Error(Errc::bad_config, "score count does not match instance");
    const std::size_t p = instance.num_inputs();

    auto col_range = [&](auto getter, std::size_t dim) {
        double lo = getter(0, dim), hi = lo;
        for (std::size_t i = 1; i < instance.n(); ++i) {
            lo = std::min(lo, getter(i, dim));
            hi = std::max(hi, getter(i, dim));
        }
        return std::pair{lo, hi};
    };
    auto in_get = [&](std::size_t i, std::size_t k) { return instance.input(i, k); };
    auto out_get = [&](std::size_t i, std::size_t l) { return instance.output(i, l); };

    std::vector<std::pair<double, double>> in_rng(p);
    for (std::size_t k = 0; k < p; ++k) in_rng[k] = col_range(in_get, k);
    auto out0 = col_range(out_get, 0);

    auto scaled = [](double v, std::pair<double, double> r) {
        return r.second > r.first ? (v - r.first) / (r.second - r.first) : 0.0;
    };
    // Figure convention: waitlist (input 0) and graft (output 0) min-max
    // scaled, KDPI (input 1) kept on its natural (0,1] scale.
    auto scale_input = [&](double v, std::size_t k) {
        return k == 1 ? v : scaled(v, in_rng[k]);
    };

    std::vector<FrontierPoint> rows;
    rows.reserve(instance.n() * p);
    for (std::size_t i = 0; i < instance.n(); ++i) {
        for (std::size_t k = 0; k < p; ++k) {
            FrontierPoint pt;
            pt.id = instance.id(i);
            pt.group = groups.empty() ? "" : groups[i];
            pt.input_dim = k;
            pt.raw_x = instance.input(i, k);
            pt.raw_y = instance.output(i, 0);
            pt.proj_x = scores[i].projected_inputs[k];
            pt.proj_y = scores[i].projected_outputs[0];
            pt.raw_x_scaled = scale_input(pt.raw_x, k);
            pt.raw_y_scaled = scaled(pt.raw_y, out0);
            pt.proj_x_scaled = scale_input(pt.proj_x, k);
            pt.proj_y_scaled = scaled(pt.proj_y, out0);
            rows.push_back(std::move(pt));
        }
    }
    return rows;
}

} // namespace fairdea
