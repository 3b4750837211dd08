#ifndef DCEARMA_PATH_HPP
#define DCEARMA_PATH_HPP

#include <vector>

#include "dcearma/model.hpp"
#include "dcearma/rng.hpp"

namespace dcearma {

/// Realized path X_1..X_n plus the excitation window xi_{p-q+1}..xi_n and
/// its continuity flags (the genie channel). Window indices follow the
/// vector identity Phi X^n = Theta xi^n_{p-q+1}.
struct SamplePath {
    int n = 0;
    int p = 0;
    int q = 0;
    int burn_in = 0;
    std::vector<double> x;             // X_1..X_n
    std::vector<double> xi;            // xi_{p-q+1}..xi_n, length n+q-p
    std::vector<unsigned char> nu;     // flags for the same window

    int window_start() const { return p - q + 1; }
    int window_length() const { return n + q - p > 0 ? n + q - p : 0; }

    double xi_at(int t) const { return xi[static_cast<std::size_t>(t - window_start())]; }
    bool nu_at(int t) const { return nu[static_cast<std::size_t>(t - window_start())] != 0; }
};

/// Run the recursion from zero initial state for burn_in + n steps and keep
/// the last n. Excitation draws start q steps before the first simulated X
/// so every xi the recursion touches is a real draw. burn_in < 0 selects
/// default_burn_in(model). Throws BurnInOverflow if any intermediate value
/// exceeds 1e300.
SamplePath simulate_path(const ArmaModel& model, int n, int burn_in, RngStream& rng);

inline SamplePath simulate_path(const ArmaModel& model, int n, RngStream& rng) {
    return simulate_path(model, n, -1, rng);
}

} // namespace dcearma

#endif
