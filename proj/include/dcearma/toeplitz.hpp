#ifndef DCEARMA_TOEPLITZ_HPP
#define DCEARMA_TOEPLITZ_HPP

#include <Eigen/Dense>

#include "dcearma/model.hpp"
#include "dcearma/path.hpp"

namespace dcearma {

/// The four block matrices tied to a window of length n:
///
///   Phi  (n-p) x n        banded rows (phi_p .. phi_1, 1) shifting right
///   Theta(n-p) x (n+q-p)  banded rows (theta_q .. theta_1, 1)
///   PhiHat  n x n         [I_p 0; Phi], unit lower triangular, det = 1
///   ThetaHat n x (n+q)    [I_p 0; 0 Theta]
///
/// They satisfy Phi X^n = Theta xi^n_{p-q+1} on every simulated path and
/// X^n = PhiHat^{-1} ThetaHat [X^p; xi^n_{p-q+1}].
struct ToeplitzSet {
    int n = 0;
    int p = 0;
    int q = 0;
    Eigen::MatrixXd phi_mat;
    Eigen::MatrixXd theta_mat;
    Eigen::MatrixXd phi_hat;
    Eigen::MatrixXd theta_hat;

    /// Band (1, theta_1, ..., theta_q) as consumed by banded_selection_rank.
    std::vector<double> theta_band() const;
};

/// Build all four matrices. Throws BlockTooShort when n < p+1.
ToeplitzSet build_toeplitz(const ArmaModel& model, int n);

/// X^n = PhiHat^{-1} ThetaHat [x_boundary; xi_window]; x_boundary has length
/// p, xi_window length n+q-p. Solved by forward substitution (PhiHat is unit
/// lower triangular, so the system is never singular).
Eigen::VectorXd reconstruct_from_boundary(const ToeplitzSet& ts,
                                          const Eigen::VectorXd& x_boundary,
                                          const Eigen::VectorXd& xi_window);

/// max_t |(Phi x - Theta xi)_t| / (1 + max_t |x_t|) for a simulated path.
double vector_identity_residual(const ToeplitzSet& ts, const SamplePath& path);

} // namespace dcearma

#endif
