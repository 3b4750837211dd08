#include "dcearma/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace dcearma {

std::vector<std::complex<double>> monic_roots(const std::vector<double>& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    if (n == 0) return {};
    for (double c : coeffs) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("monic_roots: non-finite coefficient");
        }
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(0, i) = -coeffs[static_cast<std::size_t>(i)];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return roots;
}

int numerical_rank(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    double smax = sv(0);
    if (!(smax > 0.0)) return 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) > kRankThreshold * smax) ++rank;
    }
    return rank;
}

std::pair<double, double> extreme_singular_values(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return {0.0, 0.0};
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    return {sv(sv.size() - 1), sv(0)};
}

int banded_selection_rank(const std::vector<double>& band, int rows,
                          const std::vector<unsigned char>& selection) {
    const int q = static_cast<int>(band.size()) - 1;
    if (q < 0) throw std::invalid_argument("banded_selection_rank: empty band");
    const int cols = rows + q;
    if (static_cast<int>(selection.size()) != cols) {
        throw std::invalid_argument("banded_selection_rank: selection length mismatch");
    }
    if (rows <= 0) return 0;

    std::vector<Eigen::VectorXd> basis; // accepted orthonormal vectors
    std::vector<int> basis_col;         // their source column indices
    Eigen::VectorXd a(rows);

    int rank = 0;
    for (int c = 0; c < cols; ++c) {
        if (!selection[static_cast<std::size_t>(c)]) continue;
        a.setZero();
        for (int j = 0; j <= q; ++j) {
            int r = c - q + j;
            if (r >= 0 && r < rows) a(r) = band[static_cast<std::size_t>(j)];
        }
        double norm0 = a.norm();
        if (norm0 <= 0.0) continue;

        // Columns whose index differs by more than q have disjoint row
        // support, so only the trailing window needs orthogonalization.
        for (int pass = 0; pass < 2; ++pass) {
            for (int l = static_cast<int>(basis.size()) - 1; l >= 0; --l) {
                if (basis_col[static_cast<std::size_t>(l)] < c - q) break;
                a -= basis[static_cast<std::size_t>(l)].dot(a) * basis[static_cast<std::size_t>(l)];
            }
        }
        double norm1 = a.norm();
        if (norm1 > kRankThreshold * norm0) {
            basis.push_back(a / norm1);
            basis_col.push_back(c);
            ++rank;
            if (rank == rows) break; // full row rank reached
        }
    }
    return rank;
}

} // namespace dcearma
