#ifndef DCEARMA_CANTOR_HPP
#define DCEARMA_CANTOR_HPP

#include <vector>

#include "dcearma/rng.hpp"

namespace dcearma {

/// Samples of the truncated Bernoulli convolution sum_{k=0..depth} a^k xi_k
/// with Rademacher xi. Support lies inside [-1/(1-a), 1/(1-a)].
std::vector<double> sample_bernoulli_convolution(double a, int depth, int count,
                                                 RngStream& rng);

/// Standard Cantor function on [0,1] (clamped outside), by the
/// ternary-digit algorithm: stop at the first digit 1.
double cantor_cdf(double u);

/// CDF of the a = 1/3 Rademacher series, whose law is the Cantor
/// distribution pushed onto [-3/2, 3/2]: C((x + 3/2)/3).
double scaled_cantor_cdf(double x);

/// sup_x |empirical CDF - cdf(x)| evaluated at the sample points (the
/// Kolmogorov-Smirnov statistic).
double ks_distance(std::vector<double> samples, double (*cdf)(double));

} // namespace dcearma

#endif
