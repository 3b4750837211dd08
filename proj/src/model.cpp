#include "dcearma/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcearma/errors.hpp"
#include "dcearma/linalg.hpp"

namespace dcearma {

ArmaModel::ArmaModel(int p_, int q_, std::vector<double> phi_, std::vector<double> theta_,
                     DceDistribution excitation_)
    : p(p_), q(q_), phi(std::move(phi_)), theta(std::move(theta_)),
      excitation(std::move(excitation_)) {
    if (p < 0 || q < 0) throw std::invalid_argument("ArmaModel: p, q must be >= 0");
    if (static_cast<int>(phi.size()) != p) {
        throw std::invalid_argument("ArmaModel: phi must have length p");
    }
    if (static_cast<int>(theta.size()) != q) {
        throw std::invalid_argument("ArmaModel: theta must have length q");
    }
}

ArmaModel ArmaModel::ar(std::vector<double> phi_, DceDistribution excitation_) {
    int p_ = static_cast<int>(phi_.size());
    return ArmaModel(p_, 0, std::move(phi_), {}, std::move(excitation_));
}

ArmaModel ArmaModel::ma(std::vector<double> theta_, DceDistribution excitation_) {
    int q_ = static_cast<int>(theta_.size());
    return ArmaModel(0, q_, {}, std::move(theta_), std::move(excitation_));
}

ArmaModel ArmaModel::iid(DceDistribution excitation_) {
    return ArmaModel(0, 0, {}, {}, std::move(excitation_));
}

StationarityReport validate_model(const ArmaModel& model) {
    for (double c : model.phi) {
        if (!std::isfinite(c)) throw NonFiniteCoefficient("phi has NaN or inf");
    }
    for (double c : model.theta) {
        if (!std::isfinite(c)) throw NonFiniteCoefficient("theta has NaN or inf");
    }
    StationarityReport report;
    auto roots = monic_roots(model.phi);
    report.pole_moduli.reserve(roots.size());
    for (const auto& r : roots) report.pole_moduli.push_back(std::abs(r));
    std::sort(report.pole_moduli.begin(), report.pole_moduli.end(), std::greater<>());
    report.stable = true;
    for (double m : report.pole_moduli) {
        if (!(m < 1.0 - 1e-9)) report.stable = false;
    }
    return report;
}

double max_pole_modulus(const ArmaModel& model) {
    if (model.p == 0) return 0.0;
    auto report = validate_model(model);
    return report.pole_moduli.empty() ? 0.0 : report.pole_moduli.front();
}

int default_burn_in(const ArmaModel& model) {
    if (model.p == 0) return 0;
    double rho = max_pole_modulus(model);
    if (rho <= 0.0) return 0;
    double steps = std::ceil(60.0 / std::fabs(std::log(rho)));
    return static_cast<int>(std::min(steps, 1e5));
}

std::vector<double> impulse_response(const ArmaModel& model, int N) {
    if (N < 0) throw std::invalid_argument("impulse_response: N must be >= 0");
    std::vector<double> h(static_cast<std::size_t>(N) + 1, 0.0);
    h[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        double v = (n <= model.q) ? model.theta[static_cast<std::size_t>(n - 1)] : 0.0;
        int imax = std::min(n, model.p);
        for (int i = 1; i <= imax; ++i) {
            v -= model.phi[static_cast<std::size_t>(i - 1)] * h[static_cast<std::size_t>(n - i)];
        }
        h[static_cast<std::size_t>(n)] = v;
    }
    return h;
}

} // namespace dcearma
