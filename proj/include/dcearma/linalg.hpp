#ifndef DCEARMA_LINALG_HPP
#define DCEARMA_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace dcearma {

/// Global relative singular-value threshold for numerical rank decisions:
/// sigma_i counts toward the rank iff sigma_i > kRankThreshold * sigma_max.
inline constexpr double kRankThreshold = 1e-8;

/// Roots of a monic polynomial z^n + c[0] z^{n-1} + ... + c[n-1] via the
/// companion matrix. `coeffs` holds c[0..n-1].
std::vector<std::complex<double>> monic_roots(const std::vector<double>& coeffs);

/// Rank at the global threshold, from singular values.
int numerical_rank(const Eigen::MatrixXd& m);

/// Largest/smallest singular value ratio guard: returns (smin, smax).
std::pair<double, double> extreme_singular_values(const Eigen::MatrixXd& m);

/// Rank of the column submatrix of a banded Toeplitz matrix selected by a
/// binary pattern, computed by modified Gram-Schmidt with one
/// reorthogonalization pass. The matrix has `rows` rows and columns indexed
/// by c = 0..rows+band-2, where column c carries band[j] at row c - j for
/// j = 0..band.size()-1 (entries outside [0, rows) clipped). This is
/// exactly the layout of the MA Toeplitz matrix with band
/// (1, theta_1, ..., theta_q) read from the diagonal outward.
///
/// Agrees with the SVD rank at the same relative threshold for the generic
/// matrices used here; the dedicated tests cross-check the two routes.
int banded_selection_rank(const std::vector<double>& band, int rows,
                          const std::vector<unsigned char>& selection);

} // namespace dcearma

#endif
