#ifndef DCEARMA_HANKEL_HPP
#define DCEARMA_HANKEL_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dcearma/histogram.hpp"
#include "dcearma/model.hpp"
#include "dcearma/rng.hpp"

namespace dcearma {

/// Proper rational transfer function in pole/zero form,
///
///   H(z) = gain * prod_j (z - zeros_j) / prod_i (z - poles_i),
///
/// with removable pole/zero pairs cancelled at construction (values matching
/// within 1e-10). Poles or zeros at the origin are kept in the lists; the
/// counts p' (origin poles) and p (nonzero poles) drive the Hankel lemmas.
class RationalFilter {
public:
    RationalFilter(std::vector<std::complex<double>> zeros,
                   std::vector<std::complex<double>> poles, double gain);

    static RationalFilter from_model(const ArmaModel& model);

    const std::vector<std::complex<double>>& zeros() const { return zeros_; }
    const std::vector<std::complex<double>>& poles() const { return poles_; }
    double gain() const { return gain_; }

    int zero_pole_count() const { return zero_pole_count_; }      // p': poles at z = 0
    int nonzero_pole_count() const { return nonzero_pole_count_; } // p
    int total_pole_count() const { return zero_pole_count_ + nonzero_pole_count_; }

    /// Largest pole modulus (0 if no poles).
    double max_pole_modulus() const;

    /// Laurent coefficients h[0..N] about z = infinity (causal impulse
    /// response), by power-series division in w = 1/z.
    std::vector<double> impulse_response(int N) const;

private:
    std::vector<std::complex<double>> zeros_;
    std::vector<std::complex<double>> poles_;
    double gain_;
    int zero_pole_count_ = 0;
    int nonzero_pole_count_ = 0;
};

/// [h[offset + j + k]] for j,k in 0..size-1. Throws
/// InsufficientImpulseLength unless offset + 2(size-1) < h.size().
Eigen::MatrixXd hankel_from_impulse(const std::vector<double>& h, int size, int offset);

struct HankelCheck {
    double det_estimate = 0.0;
    bool nonsingular = false;
};

/// Hankel determinant test behind the rank lemma for proper rational
/// filters: builds the s x s matrix [h[j+k]] with s = total non-removable
/// pole count and reports sigma_min/sigma_max > 1e-8.
HankelCheck check_hankel_nonsingular(const RationalFilter& filter);

struct ShiftedHankelResult {
    int rank = 0;
    bool full = false;
    int size = 0;
};

/// Rank of H^(i) = [h[ip-p-1+j+k]] (p x p, p = nonzero pole count). The
/// lemma guarantees full rank only for i >= ceil((p'+1)/p) + 1; smaller i
/// (or p = 0) throws IndexBelowThreshold.
ShiftedHankelResult shifted_hankel_full_rank(const RationalFilter& filter, int i);

/// Smallest admissible shift index for the filter.
int shifted_hankel_threshold(const RationalFilter& filter);

/// For each trial select columns independently with probability alpha and
/// tally the numerical rank of the selection.
IntHistogram random_column_rank_distribution(const Eigen::MatrixXd& mat, double alpha,
                                             int trials, RngStream& rng);

/// Random stable proper filter: `nonzero_poles` poles with modulus uniform
/// in [0.1, 0.9] (conjugate-paired), `origin_poles` poles at z = 0, the same
/// number of nonzero zeros sampled likewise; pole/zero pairs closer than
/// 1e-6 are resampled.
RationalFilter random_stable_filter(int nonzero_poles, int origin_poles, RngStream& rng);

} // namespace dcearma

#endif
