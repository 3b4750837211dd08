#include "dcearma/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcearma {

std::vector<double> sample_bernoulli_convolution(double a, int depth, int count,
                                                 RngStream& rng) {
    if (!(a > 0.0 && a < 1.0)) {
        throw std::invalid_argument("bernoulli_convolution: a must be in (0,1)");
    }
    if (depth < 1) throw std::invalid_argument("bernoulli_convolution: depth must be >= 1");
    if (count < 0) throw std::invalid_argument("bernoulli_convolution: count < 0");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (auto& v : out) {
        double acc = 0.0;
        double scale = 1.0;
        for (int k = 0; k <= depth; ++k) {
            acc += scale * (rng.bernoulli(0.5) ? 1.0 : -1.0);
            scale *= a;
        }
        v = acc;
    }
    return out;
}

double cantor_cdf(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double acc = 0.0;
    double scale = 0.5;
    for (int k = 0; k < 60; ++k) {
        u *= 3.0;
        int digit = static_cast<int>(u);
        u -= digit;
        if (digit == 1) {
            acc += scale;
            break;
        }
        if (digit >= 2) acc += scale;
        scale *= 0.5;
    }
    return acc;
}

double scaled_cantor_cdf(double x) { return cantor_cdf((x + 1.5) / 3.0); }

double ks_distance(std::vector<double> samples, double (*cdf)(double)) {
    if (samples.empty()) throw std::invalid_argument("ks_distance: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        worst = std::max({worst, std::fabs(f - lo), std::fabs(f - hi)});
    }
    return worst;
}

} // namespace dcearma
