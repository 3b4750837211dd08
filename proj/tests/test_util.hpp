#ifndef DCEARMA_TEST_UTIL_HPP
#define DCEARMA_TEST_UTIL_HPP

#include <complex>
#include <vector>

#include "dcearma/model.hpp"
#include "dcearma/rng.hpp"

namespace dcearma::testutil {

// Expand prod (z - r_i) into monic coefficients c with
// z^p + c[0] z^{p-1} + ... + c[p-1].
inline std::vector<double> poly_from_roots(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> poly{1.0};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= r * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<double> out(poly.size() - 1);
    for (std::size_t i = 1; i < poly.size(); ++i) out[i - 1] = poly[i].real();
    return out;
}

inline std::vector<std::complex<double>> random_conjugate_set(int count, RngStream& rng,
                                                              double lo = 0.1,
                                                              double hi = 0.9) {
    std::vector<std::complex<double>> out;
    while (static_cast<int>(out.size()) < count) {
        int remaining = count - static_cast<int>(out.size());
        double mod = rng.uniform(lo, hi);
        if (remaining >= 2 && rng.bernoulli(0.5)) {
            double angle = rng.uniform(0.05, 3.09);
            auto z = std::polar(mod, angle);
            out.push_back(z);
            out.push_back(std::conj(z));
        } else {
            out.push_back(rng.bernoulli(0.5) ? mod : -mod);
        }
    }
    return out;
}

/// Random stable ARMA model with poles of modulus in [0.1, 0.9] and
/// theta coefficients uniform in [-1, 1].
inline ArmaModel random_stable_model(int p, int q, double alpha, RngStream& rng) {
    std::vector<double> phi = poly_from_roots(random_conjugate_set(p, rng));
    std::vector<double> theta(static_cast<std::size_t>(q));
    for (auto& t : theta) t = rng.uniform(-1.0, 1.0);
    DceDistribution dist =
        alpha >= 1.0 ? DceDistribution::continuous_only(GaussianSpec{})
        : alpha <= 0.0
            ? DceDistribution::rademacher()
            : DceDistribution::bernoulli_gaussian(alpha);
    return ArmaModel(p, q, std::move(phi), std::move(theta), std::move(dist));
}

} // namespace dcearma::testutil

#endif
