#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fairdea {

/// Input-output data for one DEA run. All entries must be strictly
/// positive. Columns to minimise go in `inputs`, columns to maximise in
/// `outputs`; rows are decision-making units.
class DeaInstance {
public:
    DeaInstance(std::vector<double> inputs, std::vector<double> outputs, std::size_t n,
                std::size_t p, std::size_t q, std::vector<std::string> ids = {});

    std::size_t n() const { return n_; }
    std::size_t num_inputs() const { return p_; }
    std::size_t num_outputs() const { return q_; }
    double input(std::size_t i, std::size_t k) const { return inputs_[i * p_ + k]; }
    double output(std::size_t i, std::size_t l) const { return outputs_[i * q_ + l]; }
    const std::string& id(std::size_t i) const { return ids_[i]; }

    /// Units that are not weakly dominated by any other unit. Every
    /// feasible convex combination can be rewritten on this set, so the
    /// LP only needs these columns.
    const std::vector<std::size_t>& frontier_candidates() const { return candidates_; }

private:
    std::vector<double> inputs_, outputs_;
    std::size_t n_, p_, q_;
    std::vector<std::string> ids_;
    std::vector<std::size_t> candidates_;
};

struct EfficiencyScore {
    double theta = 1.0;
    bool on_frontier = false;
    std::vector<double> projected_inputs;  // theta * X_i
    std::vector<double> projected_outputs; // Y_i / theta
};

inline constexpr double kFrontierTol = 1e-5;

/// True iff some convex combination of units weakly dominates the scaled
/// point (theta * X_i, Y_i / theta). Decided by phase-1 simplex.
bool lp_feasible(const DeaInstance& instance, std::size_t i, double theta);

/// Smallest feasible scaling factor in (0, 1], located by bisection over
/// lp_feasible (monotone in theta).
EfficiencyScore hyperbolic_efficiency(const DeaInstance& instance, std::size_t i,
                                      double tol = 1e-6);

struct EfficiencyBatch {
    std::vector<EfficiencyScore> scores; // one per unit, unit order
    std::vector<std::pair<std::size_t, std::string>> failures;
};

EfficiencyBatch efficiency_all(const DeaInstance& instance, double tol = 1e-6);

/// One frontier-plot row per (unit, input dimension): raw and projected
/// coordinates, plus the Figure-style min-max scaled variants (waitlist
/// and graft columns scaled to [0,1], the KDPI column left as-is).
struct FrontierPoint {
    std::string id;
    std::string group;
    std::size_t input_dim = 0;
    double raw_x = 0, raw_y = 0;
    double proj_x = 0, proj_y = 0;
    double raw_x_scaled = 0, raw_y_scaled = 0;
    double proj_x_scaled = 0, proj_y_scaled = 0;
};

std::vector<FrontierPoint> frontier_plot_data(const DeaInstance& instance,
                                              const std::vector<EfficiencyScore>& scores,
                                              const std::vector<std::string>& groups = {});

} // namespace fairdea
