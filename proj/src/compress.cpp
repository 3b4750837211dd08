#include "dcearma/compress.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcearma/errors.hpp"
#include "dcearma/linalg.hpp"
#include "dcearma/parallel.hpp"

namespace dcearma {

Eigen::MatrixXd gaussian_measurement_matrix(int rows, int n, RngStream& rng) {
    if (rows < 0 || n < 1) {
        throw std::invalid_argument("gaussian_measurement_matrix: bad shape");
    }
    const double sd = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXd a(rows, n);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = rng.normal(0.0, sd);
    }
    return a;
}

Eigen::VectorXd linear_encode(const Eigen::MatrixXd& A, const Eigen::VectorXd& x) {
    if (A.cols() != x.size()) throw DimensionMismatch("linear_encode: A cols != dim x");
    return A * x;
}

DecodeResult decode_on_component(const Eigen::VectorXd& y, const Eigen::MatrixXd& A,
                                 const SingularComponent& comp) {
    if (A.rows() < 1) throw std::invalid_argument("decode_on_component: no measurements");
    if (A.rows() != y.size()) throw DimensionMismatch("decode_on_component: y size");
    if (A.cols() != comp.offset.size()) {
        throw DimensionMismatch("decode_on_component: component dimension");
    }
    DecodeResult out;
    Eigen::VectorXd rhs = y - A * comp.offset;
    const int d = comp.dim;
    if (d == 0) {
        out.x_hat = comp.offset;
        out.residual = rhs.norm();
        out.cond_ratio = 1.0;
        return out;
    }
    if (A.rows() < d) {
        throw IllConditioned("decode_on_component: fewer measurements than dimension");
    }
    Eigen::MatrixXd ab = A * comp.basis;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(ab, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    out.cond_ratio = sv(0) > 0.0 ? sv(sv.size() - 1) / sv(0) : 0.0;
    if (!(out.cond_ratio > 1e-10)) {
        throw IllConditioned("decode_on_component: sigma_min/sigma_max <= 1e-10");
    }
    Eigen::VectorXd c = svd.solve(rhs);
    out.x_hat = comp.basis * c + comp.offset;
    out.residual = (ab * c - rhs).norm();
    return out;
}

std::vector<NuPattern> candidate_patterns(int n, int p, int q, double alpha, int budget) {
    if (budget < 1) throw std::invalid_argument("candidate_patterns: budget < 1");
    const int window = n + q - p;
    if (window < 0) throw std::invalid_argument("candidate_patterns: empty window");

    // order popcount classes by per-pattern likelihood alpha^k (1-alpha)^(w-k)
    std::vector<int> ks(static_cast<std::size_t>(window) + 1);
    for (int k = 0; k <= window; ++k) ks[static_cast<std::size_t>(k)] = k;
    const double mean = alpha * static_cast<double>(window);
    auto log_like = [&](int k) {
        if (alpha <= 0.0) return k == 0 ? 0.0 : -1e18;
        if (alpha >= 1.0) return k == window ? 0.0 : -1e18;
        return static_cast<double>(k) * std::log(alpha) +
               static_cast<double>(window - k) * std::log(1.0 - alpha);
    };
    std::stable_sort(ks.begin(), ks.end(), [&](int a, int b) {
        double la = log_like(a), lb = log_like(b);
        if (la != lb) return la > lb;
        double da = std::fabs(static_cast<double>(a) - mean);
        double db = std::fabs(static_cast<double>(b) - mean);
        if (da != db) return da < db;
        return a > b;
    });

    std::vector<NuPattern> out;
    out.reserve(static_cast<std::size_t>(budget));
    for (int k : ks) {
        if (static_cast<int>(out.size()) >= budget) break;
        // lexicographic combinations of k one-flags
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            NuPattern pat{n, p, q,
                          std::vector<unsigned char>(static_cast<std::size_t>(window), 0)};
            for (int i : idx) pat.flags[static_cast<std::size_t>(i)] = 1;
            out.push_back(std::move(pat));
            if (static_cast<int>(out.size()) >= budget) break;
            // next combination
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == window - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return out;
}

namespace {

struct TrialTally {
    std::int64_t successes = 0;
    std::int64_t dv_sum = 0;
};

bool recovered(const Eigen::VectorXd& x_hat, const Eigen::VectorXd& x, double tol) {
    double err = (x_hat - x).cwiseAbs().maxCoeff();
    return err / (1.0 + x.cwiseAbs().maxCoeff()) < tol;
}

// Try candidate components in order; accept the first whose measurement
// residual is below accept_tol * ||y||.
struct SearchDecode {
    bool decoded = false;
    Eigen::VectorXd x_hat;
};

SearchDecode search_decode(const Eigen::VectorXd& y, const Eigen::MatrixXd& A,
                           const ComponentFactory& factory,
                           const std::vector<NuPattern>& patterns,
                           const std::vector<double>& atom_values, int budget) {
    SearchDecode out;
    const double accept = 1e-8 * std::max(y.norm(), 1e-300);
    int examined = 0;
    for (const auto& pat : patterns) {
        if (examined >= budget) break;
        const int zeros = pat.window_length() - pat.popcount();
        // enumerate atom assignments lexicographically
        std::vector<int> digits(static_cast<std::size_t>(zeros), 0);
        const int base = std::max<int>(1, static_cast<int>(atom_values.size()));
        for (;;) {
            if (examined >= budget) break;
            std::vector<double> assignment(static_cast<std::size_t>(zeros));
            for (int i = 0; i < zeros; ++i) {
                assignment[static_cast<std::size_t>(i)] =
                    atom_values.empty() ? 0.0
                                        : atom_values[static_cast<std::size_t>(
                                              digits[static_cast<std::size_t>(i)])];
            }
            ++examined;
            try {
                auto comp = factory.build(pat, assignment);
                auto dec = decode_on_component(y, A, comp);
                if (dec.residual <= accept) {
                    out.decoded = true;
                    out.x_hat = dec.x_hat;
                    return out;
                }
            } catch (const IllConditioned&) {
                // candidate not decodable at this measurement count
            }
            // next assignment
            int i = zeros - 1;
            while (i >= 0 && digits[static_cast<std::size_t>(i)] == base - 1) {
                digits[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++digits[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

} // namespace

RateTrialResult rate_trial(const ArmaModel& model, const RateTrialConfig& cfg,
                           std::uint64_t seed) {
    if (cfg.n < model.p + 1) throw BlockTooShort("rate_trial: n must be >= p+1");
    if (cfg.trials < 1) throw std::invalid_argument("rate_trial: trials < 1");
    if (!(cfg.rate >= 0.0 && cfg.rate <= 1.0)) {
        throw std::invalid_argument("rate_trial: rate must be in [0,1]");
    }
    if (!validate_model(model).stable) {
        throw std::invalid_argument("rate_trial: model is not stable");
    }

    const int n = cfg.n;
    const int m_count = static_cast<int>(std::floor(cfg.rate * static_cast<double>(n) + 1e-9));
    ToeplitzSet ts = build_toeplitz(model, n);
    ComponentFactory factory(ts);

    RngStream batch_rng = RngStream::substream(seed, 0);
    Eigen::MatrixXd a_full = gaussian_measurement_matrix(n, n, batch_rng);
    Eigen::MatrixXd a = a_full.topRows(m_count);

    std::vector<NuPattern> patterns;
    std::vector<double> atom_values;
    if (cfg.mode == DecoderMode::PatternSearch) {
        patterns = candidate_patterns(n, model.p, model.q, model.excitation.alpha(),
                                      cfg.search_budget);
        for (const auto& atom : model.excitation.atoms()) atom_values.push_back(atom.value);
    }

    auto per_trial = [&](int t) -> TrialTally {
        TrialTally tally;
        RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(t) + 1);
        SamplePath path = simulate_path(model, n, rng);
        Eigen::Map<const Eigen::VectorXd> x(path.x.data(), n);
        SingularComponent genie = factory.genie(path);
        tally.dv_sum = genie.dim;
        if (m_count < 1) return tally; // no measurements, counted failure

        Eigen::VectorXd y = a * x;
        if (cfg.mode == DecoderMode::Genie) {
            try {
                auto dec = decode_on_component(y, a, genie);
                if (recovered(dec.x_hat, x, cfg.success_tol)) tally.successes = 1;
            } catch (const IllConditioned&) {
            }
        } else {
            auto found = search_decode(y, a, factory, patterns, atom_values,
                                       cfg.search_budget);
            if (found.decoded && recovered(found.x_hat, x, cfg.success_tol)) {
                tally.successes = 1;
            }
        }
        return tally;
    };

    TrialTally total = parallel_trials<TrialTally>(
        cfg.trials, TrialTally{}, per_trial, [](TrialTally& acc, const TrialTally& t) {
            acc.successes += t.successes;
            acc.dv_sum += t.dv_sum;
        });

    RateTrialResult result;
    result.config = cfg;
    result.successes = static_cast<int>(total.successes);
    result.measurement_count = m_count;
    result.mean_dv = static_cast<double>(total.dv_sum) / static_cast<double>(cfg.trials);
    return result;
}

std::vector<RateTrialResult> rate_curve(const ArmaModel& model, int n,
                                        const std::vector<double>& rates, int trials,
                                        std::uint64_t seed, DecoderMode mode,
                                        double success_tol, int search_budget) {
    std::vector<RateTrialResult> out;
    out.reserve(rates.size());
    for (double r : rates) {
        RateTrialConfig cfg;
        cfg.n = n;
        cfg.rate = r;
        cfg.trials = trials;
        cfg.mode = mode;
        cfg.search_budget = search_budget;
        cfg.success_tol = success_tol;
        out.push_back(rate_trial(model, cfg, seed));
    }
    return out;
}

} // namespace dcearma
