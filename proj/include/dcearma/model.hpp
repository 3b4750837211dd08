#ifndef DCEARMA_MODEL_HPP
#define DCEARMA_MODEL_HPP

#include <vector>

#include "dcearma/distribution.hpp"

namespace dcearma {

/// (p,q) ARMA model driven by a mixed discrete-continuous excitation law:
///
///     X_t = xi_t + sum_{i=1..q} theta_i xi_{t-i} - sum_{i=1..p} phi_i X_{t-i}
///
/// Note the minus sign on the AR sum: the textbook recursion
/// X_t = xi_t + h_1 X_{t-1} + ... corresponds to phi_1 = -h_1 here.
struct ArmaModel {
    int p = 0;
    int q = 0;
    std::vector<double> phi;   // phi_1..phi_p
    std::vector<double> theta; // theta_1..theta_q
    DceDistribution excitation;

    ArmaModel(int p_, int q_, std::vector<double> phi_, std::vector<double> theta_,
              DceDistribution excitation_);

    /// AR(p) shortcut.
    static ArmaModel ar(std::vector<double> phi_, DceDistribution excitation_);
    /// MA(q) shortcut.
    static ArmaModel ma(std::vector<double> theta_, DceDistribution excitation_);
    /// i.i.d. excitation process (p = q = 0).
    static ArmaModel iid(DceDistribution excitation_);
};

struct StationarityReport {
    bool stable = false;
    std::vector<double> pole_moduli; // sorted descending
};

/// Causal-stationarity check: all roots of z^p + phi_1 z^{p-1} + ... + phi_p
/// must satisfy |z| < 1 - 1e-9. Throws NonFiniteCoefficient on NaN/inf input.
StationarityReport validate_model(const ArmaModel& model);

/// Largest AR pole modulus (0 when p = 0).
double max_pole_modulus(const ArmaModel& model);

/// Default burn-in: 60 time constants of the slowest pole, capped at 1e5;
/// 0 when p = 0.
int default_burn_in(const ArmaModel& model);

/// First N+1 Laurent coefficients h[0..N] of the transfer function about
/// z = infinity, from the division recursion
/// h[n] = theta_n 1{n<=q} - sum_{i=1..min(n,p)} phi_i h[n-i], h[0] = 1.
std::vector<double> impulse_response(const ArmaModel& model, int N);

} // namespace dcearma

#endif
