#include "fairdea/estimators.hpp"

#include <cmath>

#include "fairdea/errors.hpp"

namespace fairdea {

namespace {

Eigen::MatrixXd with_intercept(const Eigen::MatrixXd& X) {
    Eigen::MatrixXd A(X.rows(), X.cols() + 1);
    A.col(0).setOnes();
    A.rightCols(X.cols()) = X;
    return A;
}

std::vector<std::string> default_names(Eigen::Index k) {
    std::vector<std::string> names;
    for (Eigen::Index j = 0; j < k; ++j) names.push_back("x" + std::to_string(j));
    return names;
}

double sigmoid(double t) {
    if (t >= 0) {
        double e = std::exp(-t);
        return 1.0 / (1.0 + e);
    }
    double e = std::exp(t);
    return e / (1.0 + e);
}

double log_likelihood(const Eigen::VectorXd& eta, const Eigen::VectorXd& b, double ridge,
                      const Eigen::VectorXd& beta) {
    double ll = 0.0;
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
        // log sigma(eta) and log(1-sigma(eta)) without overflow
        double t = eta[i];
        double log1pe = t > 35 ? t : std::log1p(std::exp(t));
        ll += b[i] * t - log1pe;
    }
    if (ridge > 0.0) ll -= 0.5 * ridge * beta.squaredNorm();
    return ll;
}

} // namespace

double LogisticModel::predict_prob(const Eigen::RowVectorXd& x) const {
    return sigmoid(linear_predictor(x));
}

LinearModel ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& z,
                    std::vector<std::string> feature_names, const OlsOptions& opts) {
    if (X.rows() != z.size()) throw Error(Errc::bad_config, "OLS row count mismatch");
    if (X.rows() < X.cols() + 1)
        throw Error(Errc::bad_config, "OLS needs rows >= columns (incl. intercept)");
    Eigen::MatrixXd A = with_intercept(X);
    const Eigen::Index k = A.cols();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    qr.setThreshold(1e-10);
    LinearModel model;
    Eigen::VectorXd beta;
    Eigen::MatrixXd xtx_inv;
    if (qr.rank() < k) {
        if (!opts.ridge_fallback)
            throw Error(Errc::rank_deficient, "design matrix is rank deficient");
        Eigen::MatrixXd G = A.transpose() * A;
        double lambda = 1e-6 * G.trace() / static_cast<double>(k);
        G.diagonal().array() += lambda;
        Eigen::LDLT<Eigen::MatrixXd> ldlt(G);
        beta = ldlt.solve(A.transpose() * z);
        xtx_inv = ldlt.solve(Eigen::MatrixXd::Identity(k, k));
        model.ridge_fallback_used = true;
    } else {
        beta = qr.solve(z);
        xtx_inv = (A.transpose() * A).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
    }

    double dof = static_cast<double>(A.rows() - k);
    double sigma2 = dof > 0 ? (z - A * beta).squaredNorm() / dof : 0.0;
    model.intercept = beta[0];
    model.coefficients = beta.tail(k - 1);
    model.std_errors = (sigma2 * xtx_inv.diagonal().array()).cwiseMax(0.0).sqrt();
    model.feature_names =
        feature_names.empty() ? default_names(X.cols()) : std::move(feature_names);
    if (static_cast<Eigen::Index>(model.feature_names.size()) != X.cols())
        throw Error(Errc::bad_config, "feature name count mismatch");
    return model;
}

LogisticModel logistic_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& b,
                           std::vector<std::string> feature_names, const LogisticOptions& opts) {
    if (X.rows() != b.size()) throw Error(Errc::bad_config, "logistic row count mismatch");
    bool has0 = false, has1 = false;
    for (Eigen::Index i = 0; i < b.size(); ++i) {
        if (b[i] == 0.0) has0 = true;
        else if (b[i] == 1.0) has1 = true;
        else throw Error(Errc::bad_config, "logistic response must be 0/1");
    }
    if (!has0 || !has1) throw Error(Errc::bad_config, "logistic needs both classes present");

    Eigen::MatrixXd A = with_intercept(X);
    const Eigen::Index k = A.cols();

    auto irls = [&](double ridge, bool* separated) {
        Eigen::VectorXd beta = Eigen::VectorXd::Zero(k);
        Eigen::VectorXd eta = A * beta;
        double ll = log_likelihood(eta, b, ridge, beta);
        int iter = 0;
        for (; iter < opts.max_iterations; ++iter) {
            Eigen::VectorXd p(eta.size());
            for (Eigen::Index i = 0; i < eta.size(); ++i) p[i] = sigmoid(eta[i]);
            Eigen::VectorXd grad = A.transpose() * (b - p);
            if (ridge > 0.0) grad -= ridge * beta;
            if (grad.norm() <= opts.gradient_tol) break;

            Eigen::VectorXd w = (p.array() * (1.0 - p.array())).cwiseMax(1e-10);
            Eigen::MatrixXd H = A.transpose() * w.asDiagonal() * A;
            if (ridge > 0.0) H.diagonal().array() += ridge;
            Eigen::VectorXd step = H.ldlt().solve(grad);

            double scale = 1.0;
            for (int half = 0; half < 40; ++half) {
                Eigen::VectorXd cand = beta + scale * step;
                Eigen::VectorXd ceta = A * cand;
                double cll = log_likelihood(ceta, b, ridge, cand);
                if (cll >= ll - 1e-12) {
                    beta = cand;
                    eta = ceta;
                    ll = cll;
                    break;
                }
                scale *= 0.5;
            }
            if (ridge == 0.0 && eta.cwiseAbs().maxCoeff() > opts.separation_linpred) {
                *separated = true;
                break;
            }
        }
        return std::pair{beta, iter};
    };

    bool separated = false;
    auto [beta, iters] = irls(0.0, &separated);
    LogisticModel model;
    if (separated) {
        double ridge = 1e-3 * static_cast<double>(A.rows());
        bool ignore = false;
        std::tie(beta, iters) = irls(ridge, &ignore);
        model.separation_flagged = true;
    }

    Eigen::VectorXd eta = A * beta;
    Eigen::VectorXd w(eta.size());
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
        double p = sigmoid(eta[i]);
        w[i] = std::max(p * (1.0 - p), 1e-10);
    }
    Eigen::MatrixXd H = A.transpose() * w.asDiagonal() * A;
    Eigen::MatrixXd cov = H.ldlt().solve(Eigen::MatrixXd::Identity(k, k));

    model.intercept = beta[0];
    model.coefficients = beta.tail(k - 1);
    model.std_errors = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
    model.iterations = iters;
    model.feature_names =
        feature_names.empty() ? default_names(X.cols()) : std::move(feature_names);
    if (static_cast<Eigen::Index>(model.feature_names.size()) != X.cols())
        throw Error(Errc::bad_config, "feature name count mismatch");
    return model;
}

} // namespace fairdea
