#ifndef DCEARMA_REPORTS_HPP
#define DCEARMA_REPORTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcearma/model.hpp"
#include "dcearma/path.hpp"

namespace dcearma {

/// Parsed command line for one run. `run()` dispatches to the module ops
/// and writes CSV (and optionally SVG) artifacts into out_dir.
struct RunConfig {
    std::string command;      // simulate|rid|bid|idr|histogram|concentration|
                              // compress|hankel|cantor|figures
    std::string model_file;   // key-value model spec; required by most commands
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    bool svg = false;

    int n = 100;
    int trials = 10000;
    int burn_in = -1;
    std::vector<int> m_grid;              // rid
    std::int64_t samples = 100000;        // rid/idr/cantor sample budget
    int m = 32;                           // idr / single-m ops
    std::vector<int> n_grid;              // idr
    int m_max = 200;                      // bid bounds sweep
    std::vector<double> rates;            // compress
    std::string decoder = "genie";        // genie | search:K
    double tol = 1e-6;                    // compress success tolerance
    double conv_a = 1.0 / 3.0;            // cantor
    int depth = 25;                       // cantor
    int lag = 1;                          // scatter
    double alpha = 0.5;                   // hankel column-selection probability
    std::string figure;                   // figures subcommand
};

/// Executes one command; returns the list of files written.
/// Throws ConfigError for configuration problems (CLI maps that to exit 2)
/// and other exceptions for runtime failures (exit 1).
std::vector<std::string> run(const RunConfig& config);

struct ScatterPoint {
    int t = 0;
    double x_t = 0.0;
    double x_lag = 0.0;
    bool all_discrete = false; // every intervening nu flag is 0
};

/// (X_t, X_{t+lag}) pairs annotated with whether the excitation draws
/// between them were all discrete; those points fall on the singular affine
/// set of the joint law.
std::vector<ScatterPoint> joint_scatter(const ArmaModel& model, int lag, int count,
                                        RngStream& rng);

/// Built-in models used by the `figures` recipes.
ArmaModel figure_model_ar2();    // AR(2), Bernoulli-Gaussian alpha = 0.5
ArmaModel figure_model_arma23(); // (2,3) model, alpha = 0.6
ArmaModel figure_model_ar1();    // AR(1) with pole 1/3, alpha = 0.5

} // namespace dcearma

#endif
