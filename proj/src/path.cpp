#include "dcearma/path.hpp"

#include <cmath>
#include <stdexcept>

#include "dcearma/errors.hpp"

namespace dcearma {

SamplePath simulate_path(const ArmaModel& model, int n, int burn_in, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("simulate_path: n must be >= 1");
    if (burn_in < 0) burn_in = default_burn_in(model);
    if (!validate_model(model).stable) {
        throw std::invalid_argument("simulate_path: model is not stable");
    }

    const int p = model.p;
    const int q = model.q;
    const int first_x = 1 - burn_in;   // first simulated X index
    const int first_xi = first_x - q;  // earliest excitation the recursion reads
    const int total_xi = n - first_xi + 1;

    std::vector<double> xi(static_cast<std::size_t>(total_xi));
    std::vector<unsigned char> nu(static_cast<std::size_t>(total_xi));
    for (int i = 0; i < total_xi; ++i) {
        auto [v, c] = model.excitation.draw(rng);
        xi[static_cast<std::size_t>(i)] = v;
        nu[static_cast<std::size_t>(i)] = c ? 1 : 0;
    }

    const int total_x = n - first_x + 1;
    std::vector<double> x(static_cast<std::size_t>(total_x), 0.0);
    auto x_of = [&](int t) -> double {
        return t < first_x ? 0.0 : x[static_cast<std::size_t>(t - first_x)];
    };
    for (int t = first_x; t <= n; ++t) {
        double v = xi[static_cast<std::size_t>(t - first_xi)];
        for (int i = 1; i <= q; ++i) {
            v += model.theta[static_cast<std::size_t>(i - 1)] *
                 xi[static_cast<std::size_t>(t - i - first_xi)];
        }
        for (int i = 1; i <= p; ++i) {
            v -= model.phi[static_cast<std::size_t>(i - 1)] * x_of(t - i);
        }
        if (!(std::fabs(v) <= 1e300)) {
            throw BurnInOverflow("path value exceeded 1e300 at t=" + std::to_string(t));
        }
        x[static_cast<std::size_t>(t - first_x)] = v;
    }

    SamplePath path;
    path.n = n;
    path.p = p;
    path.q = q;
    path.burn_in = burn_in;
    path.x.assign(x.end() - n, x.end());
    const int ws = p - q + 1;
    if (ws <= n) {
        path.xi.assign(xi.begin() + (ws - first_xi), xi.end());
        path.nu.assign(nu.begin() + (ws - first_xi), nu.end());
    }
    return path;
}

} // namespace dcearma
