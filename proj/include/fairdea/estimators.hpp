#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fairdea {

/// Least-squares fit with named features; intercept kept separate.
struct LinearModel {
    std::vector<std::string> feature_names;
    Eigen::VectorXd coefficients; // aligned with feature_names
    double intercept = 0.0;
    Eigen::VectorXd std_errors; // intercept first, then features
    bool ridge_fallback_used = false;

    double predict(const Eigen::RowVectorXd& x) const {
        return intercept + x.transpose().dot(coefficients);
    }
};

struct LogisticModel {
    std::vector<std::string> feature_names;
    Eigen::VectorXd coefficients;
    double intercept = 0.0;
    Eigen::VectorXd std_errors;
    bool separation_flagged = false;
    int iterations = 0;

    double linear_predictor(const Eigen::RowVectorXd& x) const {
        return intercept + x.transpose().dot(coefficients);
    }
    double predict_prob(const Eigen::RowVectorXd& x) const;
};

struct OlsOptions {
    bool ridge_fallback = true; // on rank deficiency, refit with a tiny ridge
};

/// Ordinary least squares of z on [1 | X]. Throws rank_deficient when the
/// design is singular and the ridge fallback is disabled.
LinearModel ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& z,
                    std::vector<std::string> feature_names = {}, const OlsOptions& opts = {});

struct LogisticOptions {
    double gradient_tol = 1e-8;
    int max_iterations = 100;
    /// |linear predictor| beyond this means fitted probabilities are 0/1 to
    /// machine precision: treated as perfect separation.
    double separation_linpred = 30.0;
};

/// Logistic regression of binary b on [1 | X] by IRLS with step halving
/// (log-likelihood never decreases on an accepted step). On separation the
/// returned model is a ridge-regularised fit with separation_flagged set.
LogisticModel logistic_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& b,
                           std::vector<std::string> feature_names = {},
                           const LogisticOptions& opts = {});

} // namespace fairdea
