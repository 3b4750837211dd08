#include "dcearma/toeplitz.hpp"

#include <cmath>
#include <stdexcept>

#include "dcearma/errors.hpp"

namespace dcearma {

namespace {

// Row r carries band (c_k, ..., c_1, 1) starting at column r: entry
// (r, r+j) = c_{k-j} for j < k and (r, r+k) = 1.
Eigen::MatrixXd banded_rows(const std::vector<double>& coeffs, int rows, int cols) {
    const int k = static_cast<int>(coeffs.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < k; ++j) m(r, r + j) = coeffs[static_cast<std::size_t>(k - 1 - j)];
        m(r, r + k) = 1.0;
    }
    return m;
}

} // namespace

std::vector<double> ToeplitzSet::theta_band() const {
    std::vector<double> band(static_cast<std::size_t>(q) + 1);
    band[0] = 1.0;
    for (int j = 1; j <= q; ++j) {
        // column c carries 1 at row c-q and theta_j at row c-q+j
        band[static_cast<std::size_t>(j)] =
            theta_mat.cols() > q ? theta_mat(0, q - j) : 0.0;
    }
    return band;
}

ToeplitzSet build_toeplitz(const ArmaModel& model, int n) {
    if (n < model.p + 1) {
        throw BlockTooShort("build_toeplitz: need n >= p+1, got n=" + std::to_string(n));
    }
    ToeplitzSet ts;
    ts.n = n;
    ts.p = model.p;
    ts.q = model.q;
    const int rows = n - model.p;
    ts.phi_mat = banded_rows(model.phi, rows, n);
    ts.theta_mat = banded_rows(model.theta, rows, n + model.q - model.p);

    ts.phi_hat = Eigen::MatrixXd::Zero(n, n);
    ts.phi_hat.topLeftCorner(model.p, model.p).setIdentity();
    ts.phi_hat.bottomRows(rows) = ts.phi_mat;

    ts.theta_hat = Eigen::MatrixXd::Zero(n, n + model.q);
    ts.theta_hat.topLeftCorner(model.p, model.p).setIdentity();
    ts.theta_hat.bottomRightCorner(rows, n + model.q - model.p) = ts.theta_mat;
    return ts;
}

Eigen::VectorXd reconstruct_from_boundary(const ToeplitzSet& ts,
                                          const Eigen::VectorXd& x_boundary,
                                          const Eigen::VectorXd& xi_window) {
    if (x_boundary.size() != ts.p) {
        throw DimensionMismatch("reconstruct_from_boundary: boundary must have length p");
    }
    if (xi_window.size() != ts.n + ts.q - ts.p) {
        throw DimensionMismatch("reconstruct_from_boundary: window must have length n+q-p");
    }
    Eigen::VectorXd stacked(ts.n + ts.q);
    stacked.head(ts.p) = x_boundary;
    stacked.tail(ts.n + ts.q - ts.p) = xi_window;
    Eigen::VectorXd rhs = ts.theta_hat * stacked;
    // PhiHat is unit lower triangular: forward substitution, det = 1.
    return ts.phi_hat.triangularView<Eigen::Lower>().solve(rhs);
}

double vector_identity_residual(const ToeplitzSet& ts, const SamplePath& path) {
    if (path.n != ts.n) {
        throw DimensionMismatch("vector_identity_residual: path length != block length");
    }
    Eigen::Map<const Eigen::VectorXd> x(path.x.data(), path.n);
    Eigen::Map<const Eigen::VectorXd> xi(path.xi.data(),
                                         static_cast<Eigen::Index>(path.xi.size()));
    Eigen::VectorXd r = ts.phi_mat * x - ts.theta_mat * xi;
    double rmax = r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
    double xmax = x.cwiseAbs().maxCoeff();
    return rmax / (1.0 + xmax);
}

} // namespace dcearma
