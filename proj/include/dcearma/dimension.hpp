#ifndef DCEARMA_DIMENSION_HPP
#define DCEARMA_DIMENSION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "dcearma/distribution.hpp"
#include "dcearma/model.hpp"
#include "dcearma/rng.hpp"

namespace dcearma {

// ---------------------------------------------------------------------------
// Uniform quantization [x]_m = floor(m x)/m
// ---------------------------------------------------------------------------

double quantize_value(double x, int m);
Eigen::VectorXd quantize(const Eigen::VectorXd& x, int m);

/// Integer lattice cell floor(m x), the hashable key behind [x]_m.
std::int64_t quantize_cell(double x, int m);

// ---------------------------------------------------------------------------
// Entropy estimation
// ---------------------------------------------------------------------------

enum class EntropyEstimator { PlugIn, MillerMadow };

/// Plug-in entropy -sum p log2 p of the empirical law of `keys` (sorted
/// in place). MillerMadow adds the (K-1)/(2N ln 2) bias correction.
double empirical_entropy_bits(std::vector<std::int64_t>& keys,
                              EntropyEstimator estimator = EntropyEstimator::PlugIn);

/// Same estimator for joint symbols of dimension <= 3 packed as triples.
double empirical_entropy_bits(std::vector<std::array<std::int64_t, 3>>& keys,
                              EntropyEstimator estimator = EntropyEstimator::PlugIn);

// ---------------------------------------------------------------------------
// RID estimation: slope of H([X]_m) against log2 m
// ---------------------------------------------------------------------------

struct EntropyCurvePoint {
    int m = 0;
    double entropy_bits = 0.0;
    std::int64_t samples = 0;
};

struct EntropyCurve {
    std::vector<EntropyCurvePoint> points; // m strictly increasing
    int dimension = 1;
};

struct RidEstimate {
    double slope = 0.0;
    double stderr_ = 0.0;
    int m_lo = 0; // regression window
    int m_hi = 0;
    EntropyEstimator method = EntropyEstimator::PlugIn;
};

/// Sampler of a fixed-dimension random vector (dimension <= 3 for joint
/// quantization feasibility).
struct VectorSampler {
    int dim = 1;
    std::function<void(RngStream&, double*)> fill;
};

VectorSampler sampler_from_distribution(const DceDistribution& dist);

struct RidResult {
    RidEstimate estimate;
    EntropyCurve curve;
};

/// Estimate the information dimension as the least-squares slope of
/// H([X]_m) versus log2 m over the top half of a dyadic m grid.
/// m_grid must be ascending powers of two with at least 4 entries.
RidResult estimate_rid(const VectorSampler& sampler, const std::vector<int>& m_grid,
                       std::int64_t samples_per_m, std::uint64_t seed,
                       EntropyEstimator estimator = EntropyEstimator::PlugIn);

// ---------------------------------------------------------------------------
// BID: oracle estimator and sandwich bounds
// ---------------------------------------------------------------------------

/// Genie estimate of d(X^n)/n: average of d_V over ν ~ Bern(alpha)^{n+q-p}
/// with d_V = p + rank(Theta^[nu]).
double estimate_bid_oracle(const ArmaModel& model, int n, int trials, std::uint64_t seed);

struct BidBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// lower = m a/(m+p); upper = min((p+q+m a)/(m+p), ((m+q) a+p)/(m+p)).
BidBounds bid_bounds(int m, int p, int q, double alpha);

// ---------------------------------------------------------------------------
// IDR finite-scale probe
// ---------------------------------------------------------------------------

struct IdrPoint {
    int n = 0;
    double normalized_entropy = 0.0; // H([X^n]_m) / (n log2 m)
    std::int64_t samples = 0;
};

/// Normalized joint quantized entropy for each n in n_grid (all n <= 3,
/// m <= 64). A finite-scale probe of the IDR double limit, not a convergent
/// estimator. Throws SampleStarvation when samples < 100 m^n.
std::vector<IdrPoint> estimate_idr(const ArmaModel& model, int m,
                                   const std::vector<int>& n_grid,
                                   std::int64_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Bernoulli KL and the concentration formulas
// ---------------------------------------------------------------------------

/// D(r || alpha) in nats, with 0 log 0 = 0 and +inf when alpha is degenerate
/// and r differs.
double bernoulli_kl(double r, double alpha);

enum class ConcentrationRegime { Above, Below, Void };

/// Which KL argument the upper-tail bound uses: the theorem statement reads
/// (k+q-p)/(n+q-p), the appendix proof step writes (k+q)/(n+q-p). The two
/// coincide after the d_V = p + rank shift; both are exposed.
enum class ConcentrationVariant { TheoremStatement, AppendixStepFive };

struct ConcentrationBounds {
    double p_above = 0.0; // lower bound on Pr(d_V > k), valid in Above regime
    double p_below = 0.0; // lower bound on Pr(d_V < k), valid in Below regime
    ConcentrationRegime regime = ConcentrationRegime::Void;
};

ConcentrationBounds concentration_bounds(
    int n, int p, int q, double alpha, int k,
    ConcentrationVariant variant = ConcentrationVariant::TheoremStatement);

/// Smallest n certified by the concentration corollary for
/// Pr(|d_V/n - alpha| < delta) >= 1 - eps; clamped below at p+2.
/// Requires 0 < delta < min(alpha, 1-alpha) and eps in (0,1).
int min_n_for_concentration(int p, int q, double alpha, double eps, double delta);

// ---------------------------------------------------------------------------
// Shifted-entropy bound H([X+eps]_1) <= 4 m + C
// ---------------------------------------------------------------------------

struct ShiftedEntropyPoint {
    double eps = 0.0;
    double lhs_bits = 0.0;
    double bound_bits = 0.0;
    bool holds = false;
};

struct ShiftedEntropyReport {
    double m_hat = 0.0; // empirical H([X]_1)
    int c = 0;          // smallest integer with Pr(|X| > c) < 1/4
    double C = 0.0;     // log2(c+1) - 8/3
    std::vector<ShiftedEntropyPoint> points;
};

ShiftedEntropyReport shifted_entropy_check(const DceDistribution& dist,
                                           const std::vector<double>& eps_grid,
                                           std::int64_t samples, std::uint64_t seed,
                                           double slack_bits = 0.05);

/// 1 - (1 - d^p)^(t - i0), the continuity-chance lower bound for partial
/// sums of full-rank filtered excitation blocks. Requires t >= i0.
double continuity_chance_bound(double d, int p, int t, int i0);

} // namespace dcearma

#endif
