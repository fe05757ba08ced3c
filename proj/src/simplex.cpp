#include "fairdea/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "fairdea/errors.hpp"

namespace fairdea {

Phase1Result phase1_feasible(const std::vector<std::vector<double>>& A,
                             const std::vector<double>& b, double pivot_tol,
                             double residual_tol) {
    const std::size_t m = A.size();
    if (m == 0 || b.size() != m) throw Error(Errc::bad_config, "inconsistent LP dimensions");
    const std::size_t n = A[0].size();
    const std::size_t cols = n + m + 1; // original | artificial | rhs

    // tableau rows [A | I | b], basis = artificials
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw Error(Errc::bad_config, "ragged LP matrix");
        if (b[i] < 0.0) throw Error(Errc::bad_config, "phase-1 requires b >= 0");
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1.0;
        t[i][cols - 1] = b[i];
    }
    // reduced-cost row for min(sum of artificials): r = c - sum of rows
    std::vector<double>& obj = t[m];
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        obj[j] = (j >= n && j < n + m ? 1.0 : 0.0) - s;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    Phase1Result res;
    const int max_iter = static_cast<int>(16 * (n + m) + 256);
    for (;;) {
        // Bland: entering = lowest index with negative reduced cost
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (obj[j] < -pivot_tol) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break; // optimal

        // ratio test; Bland ties by smallest basis index
        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > pivot_tol) {
                double ratio = t[i][cols - 1] / t[i][enter];
                if (ratio < best - 1e-15 ||
                    (std::abs(ratio - best) <= 1e-15 && (leave == m || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m)
            throw Error(Errc::numerical_failure, "phase-1 objective unbounded below");

        double piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            double f = t[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;

        if (++res.iterations > max_iter)
            throw Error(Errc::numerical_failure, "simplex iteration guard exceeded");
    }

    res.residual = -obj[cols - 1]; // objective value (sum of artificials)
    res.status = res.residual <= residual_tol ? LpStatus::feasible : LpStatus::infeasible;
    return res;
}

} // namespace fairdea
