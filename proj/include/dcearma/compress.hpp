#ifndef DCEARMA_COMPRESS_HPP
#define DCEARMA_COMPRESS_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "dcearma/affine.hpp"
#include "dcearma/model.hpp"

namespace dcearma {

enum class DecoderMode { Genie, PatternSearch };

struct RateTrialConfig {
    int n = 0;
    double rate = 0.0; // R in [0,1]; floor(R n) measurements
    int trials = 0;
    DecoderMode mode = DecoderMode::Genie;
    int search_budget = 64;      // K candidate components in search mode
    double success_tol = 1e-6;   // relative inf-norm for exact recovery
};

struct RateTrialResult {
    RateTrialConfig config;
    int successes = 0;
    int measurement_count = 0;
    double mean_dv = 0.0;
};

/// Measurement ensemble: entries i.i.d. Gaussian(0, 1/n).
Eigen::MatrixXd gaussian_measurement_matrix(int rows, int n, RngStream& rng);

/// y = A x.
Eigen::VectorXd linear_encode(const Eigen::MatrixXd& A, const Eigen::VectorXd& x);

struct DecodeResult {
    Eigen::VectorXd x_hat;
    double residual = 0.0;   // min_c ||A(Bc + offset) - y||_2
    double cond_ratio = 0.0; // sigma_min/sigma_max of A * basis
};

/// Least-squares decode on one affine component: minimizes
/// ||A(Bc + offset) - y|| over the component coordinates c. Throws
/// IllConditioned when A*basis is column-rank deficient at the 1e-10
/// relative singular-value threshold (in particular whenever the
/// measurement count is below the component dimension).
DecodeResult decode_on_component(const Eigen::VectorXd& y, const Eigen::MatrixXd& A,
                                 const SingularComponent& comp);

/// Candidate patterns ordered by decreasing Bernoulli likelihood
/// alpha^k (1-alpha)^(window-k); at most `budget` patterns.
std::vector<NuPattern> candidate_patterns(int n, int p, int q, double alpha, int budget);

/// One point of the rate-success curve. The measurement matrix rows are
/// nested across rates for a fixed seed (drawn once per batch), and trial t
/// always uses substream(seed, 1+t), so success is monotone in the rate up
/// to decoder conditioning noise.
RateTrialResult rate_trial(const ArmaModel& model, const RateTrialConfig& cfg,
                           std::uint64_t seed);

std::vector<RateTrialResult> rate_curve(const ArmaModel& model, int n,
                                        const std::vector<double>& rates, int trials,
                                        std::uint64_t seed,
                                        DecoderMode mode = DecoderMode::Genie,
                                        double success_tol = 1e-6, int search_budget = 64);

} // namespace dcearma

#endif
