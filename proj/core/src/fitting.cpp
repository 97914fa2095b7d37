#include "hpcproj/fitting.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace hpcproj {

namespace {

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
    const auto m = static_cast<Eigen::Index>(rows.size());
    const auto n = static_cast<Eigen::Index>(rows.front().size());
    Eigen::MatrixXd a(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != n) {
            throw fit_error("nnls: ragged coefficient rows");
        }
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = rows[i][j];
    }
    return a;
}

} // namespace

nnls_result nnls(const std::vector<std::vector<double>>& rows,
                 const std::vector<double>& rhs) {
    if (rows.empty() || rhs.size() != rows.size()) {
        throw fit_error("nnls: need at least one row and matching rhs");
    }
    const Eigen::MatrixXd a = to_matrix(rows);
    Eigen::Map<const Eigen::VectorXd> b(rhs.data(),
                                        static_cast<Eigen::Index>(rhs.size()));
    const Eigen::Index n = a.cols();

    // Lawson-Hanson active set
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(static_cast<size_t>(n), false);
    const double tol = 1e-12 * a.lpNorm<Eigen::Infinity>() *
                       std::max<double>(a.rows(), a.cols());

    for (int outer = 0; outer < 30 * static_cast<int>(n); ++outer) {
        const Eigen::VectorXd w = a.transpose() * (b - a * x);
        Eigen::Index best = -1;
        double best_w = tol;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!passive[static_cast<size_t>(j)] && w(j) > best_w) {
                best_w = w(j);
                best = j;
            }
        }
        if (best < 0) break;
        passive[static_cast<size_t>(best)] = true;

        for (;;) {
            std::vector<Eigen::Index> idx;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<size_t>(j)]) idx.push_back(j);
            }
            Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
            for (size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
            // minimum-norm solution on the passive set
            Eigen::VectorXd zp = ap.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);

            bool feasible = true;
            for (size_t k = 0; k < idx.size(); ++k) {
                if (zp(static_cast<Eigen::Index>(k)) <= 0) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                x.setZero();
                for (size_t k = 0; k < idx.size(); ++k) {
                    x(idx[k]) = zp(static_cast<Eigen::Index>(k));
                }
                break;
            }
            // step back along the segment, drop variables hitting zero
            double alpha = 1.0;
            for (size_t k = 0; k < idx.size(); ++k) {
                const double z = zp(static_cast<Eigen::Index>(k));
                const double xi = x(idx[k]);
                if (z <= 0) alpha = std::min(alpha, xi / (xi - z));
            }
            for (size_t k = 0; k < idx.size(); ++k) {
                const double z = zp(static_cast<Eigen::Index>(k));
                x(idx[k]) += alpha * (z - x(idx[k]));
            }
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<size_t>(j)] && x(j) <= tol) {
                    x(j) = 0;
                    passive[static_cast<size_t>(j)] = false;
                }
            }
        }
    }

    nnls_result out;
    out.coeffs.assign(x.data(), x.data() + n);
    for (double& c : out.coeffs) c = std::max(c, 0.0);
    out.residual_norm = (a * x - b).norm();
    return out;
}

affine_fit fit_linear(const std::vector<double>& x,
                      const std::vector<double>& y, bool with_intercept) {
    if (x.size() != y.size() || x.empty()) {
        throw fit_error("fit_linear: need matching nonempty x/y");
    }
    const auto m = static_cast<Eigen::Index>(x.size());
    affine_fit out;
    if (!with_intercept) {
        double sxx = 0, sxy = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            sxx += x[i] * x[i];
            sxy += x[i] * y[i];
        }
        if (sxx <= 0) throw fit_error("fit_linear: all regressors zero");
        out.slope = sxy / sxx;
    } else {
        if (m < 2) throw fit_error("fit_linear: affine fit needs >= 2 points");
        Eigen::MatrixXd a(m, 2);
        Eigen::VectorXd b(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            a(i, 0) = x[static_cast<size_t>(i)];
            a(i, 1) = 1.0;
            b(i) = y[static_cast<size_t>(i)];
        }
        const auto qr = a.colPivHouseholderQr();
        if (qr.rank() < 2) {
            throw fit_error("fit_linear: rank-deficient affine system "
                            "(all regressors equal)");
        }
        const Eigen::Vector2d sol = qr.solve(b);
        out.slope = sol(0);
        out.intercept = sol(1);
    }
    double ss = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double r = out.slope * x[i] + out.intercept - y[i];
        ss += r * r;
    }
    out.residual_norm = std::sqrt(ss);
    return out;
}

affine_fit fit_scaled_intercept(const std::vector<double>& x,
                                const std::vector<double>& y, double c) {
    if (x.size() != y.size() || x.size() < 2) {
        throw fit_error("fit: need >= 2 matching points");
    }
    const auto m = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd a(m, 2);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        a(i, 0) = x[static_cast<size_t>(i)];
        a(i, 1) = c;
        b(i) = y[static_cast<size_t>(i)];
    }
    const auto qr = a.colPivHouseholderQr();
    if (qr.rank() < 2) {
        throw fit_error("fit: degenerate system (all bench powers equal)");
    }
    const Eigen::Vector2d sol = qr.solve(b);
    affine_fit out;
    out.slope = sol(0);
    out.intercept = sol(1);
    out.residual_norm = (a * sol - b).norm();
    return out;
}

} // namespace hpcproj
