#ifndef DCEARMA_AFFINE_HPP
#define DCEARMA_AFFINE_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "dcearma/dimension.hpp"
#include "dcearma/histogram.hpp"
#include "dcearma/model.hpp"
#include "dcearma/path.hpp"
#include "dcearma/rng.hpp"
#include "dcearma/toeplitz.hpp"

namespace dcearma {

/// Continuity flags over the excitation window p-q+1..n. Selects one affine
/// component of the law of X^n.
struct NuPattern {
    int n = 0;
    int p = 0;
    int q = 0;
    std::vector<unsigned char> flags; // length n+q-p, 1 = continuous draw

    int window_length() const { return n + q - p; }
    int popcount() const;

    static NuPattern from_path(const SamplePath& path);
    static NuPattern all_ones(int n, int p, int q);
    static NuPattern all_zeros(int n, int p, int q);
    static NuPattern bernoulli(int n, int p, int q, double alpha, RngStream& rng);
};

/// One affine piece of the law of X^n: X lies in offset + span(basis) when
/// its pattern and realized atom values match.
struct SingularComponent {
    NuPattern pattern;
    int dim = 0;                        // d_V = p + rank(Theta^[nu])
    Eigen::MatrixXd basis;              // n x dim, orthonormal columns
    Eigen::VectorXd offset;             // n
    std::vector<double> atom_assignment; // one value per zero flag, window order
};

/// d_V = p + numerical rank of the column selection Theta^[nu] (SVD route).
int singular_dimension(const ToeplitzSet& ts, const NuPattern& pattern);

/// Precomputes PhiHat^{-1} ThetaHat once so per-trial component builds stay
/// cheap inside Monte Carlo loops.
class ComponentFactory {
public:
    explicit ComponentFactory(const ToeplitzSet& ts);

    SingularComponent build(const NuPattern& pattern,
                            const std::vector<double>& atom_assignment) const;

    /// Component of a path's own pattern with its realized atom values.
    SingularComponent genie(const SamplePath& path) const;

    const Eigen::MatrixXd& transfer() const { return transfer_; }

private:
    const ToeplitzSet& ts_;
    Eigen::MatrixXd transfer_; // PhiHat^{-1} ThetaHat, n x (n+q)
};

/// Builds U_V = [I_p 0; 0 I^[nu]], computes the SVD of
/// PhiHat^{-1} ThetaHat U_V and keeps the first d_V left singular vectors;
/// the offset is PhiHat^{-1} ThetaHat applied to the atom values placed in
/// the discrete slots (zero boundary). Throws AtomAssignmentMismatch when
/// the assignment length differs from the number of zero flags.
SingularComponent build_component(const ArmaModel& model, const ToeplitzSet& ts,
                                  const NuPattern& pattern,
                                  const std::vector<double>& atom_assignment);

/// || (I - B B^T)(x - offset) ||_2 / (1 + ||x||_2); < 1e-7 when the
/// component was built from the path's own pattern and atom values.
double verify_membership(const SamplePath& path, const SingularComponent& comp);

/// Tally of d_V over ν ~ Bern(alpha)^(n+q-p), computed with the banded
/// fast-rank route (cross-checked against the SVD route in the tests).
IntHistogram empirical_dimension_histogram(const ArmaModel& model, int n, int trials,
                                           std::uint64_t seed);

struct ConcentrationCheckRow {
    int k = 0;
    ConcentrationRegime regime = ConcentrationRegime::Void;
    double empirical = 0.0; // empirical Pr(d>k) or Pr(d<k) per regime
    double bound = 0.0;     // theoretical lower bound
    double slack = 0.0;     // 4 sigma binomial Monte Carlo slack
    bool satisfied = false; // empirical >= bound - slack (true when void)
};

/// Compare empirical tails of a dimension histogram against the
/// concentration inequalities for each k in k_grid.
std::vector<ConcentrationCheckRow> check_concentration(
    const IntHistogram& hist, int n, int p, int q, double alpha,
    const std::vector<int>& k_grid,
    ConcentrationVariant variant = ConcentrationVariant::TheoremStatement);

} // namespace dcearma

#endif
