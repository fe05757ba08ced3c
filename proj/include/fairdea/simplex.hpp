#pragma once

#include <vector>

namespace fairdea {

enum class LpStatus { feasible, infeasible };

struct Phase1Result {
    LpStatus status = LpStatus::infeasible;
    double residual = 0.0; // optimal sum of artificial variables
    int iterations = 0;
};

/// Phase-1 simplex feasibility test for { v >= 0 : A v = b } with b >= 0.
/// One artificial variable per row, Bland's rule (no cycling), dense
/// tableau. Feasible iff the minimised artificial sum is <= residual_tol.
/// Throws numerical_failure if the iteration guard is exceeded.
Phase1Result phase1_feasible(const std::vector<std::vector<double>>& A,
                             const std::vector<double>& b, double pivot_tol = 1e-9,
                             double residual_tol = 1e-9);

} // namespace fairdea
