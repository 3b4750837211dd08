#include "dcearma/dimension.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dcearma/errors.hpp"
#include "dcearma/linalg.hpp"
#include "dcearma/parallel.hpp"
#include "dcearma/path.hpp"

namespace dcearma {

namespace {

constexpr double kLn2 = 0.6931471805599453;

bool is_power_of_two(int m) { return m >= 1 && (m & (m - 1)) == 0; }

template <typename Key>
double entropy_of_sorted_keys(std::vector<Key>& keys, EntropyEstimator estimator) {
    if (keys.empty()) throw std::invalid_argument("empirical_entropy: no symbols");
    std::sort(keys.begin(), keys.end());
    const double n = static_cast<double>(keys.size());
    double acc = 0.0;
    std::int64_t support = 0;
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        double c = static_cast<double>(j - i);
        acc += c * std::log2(c);
        ++support;
        i = j;
    }
    double h = std::log2(n) - acc / n;
    if (estimator == EntropyEstimator::MillerMadow) {
        h += static_cast<double>(support - 1) / (2.0 * n * kLn2);
    }
    return h;
}

} // namespace

double quantize_value(double x, int m) {
    if (m < 1) throw std::invalid_argument("quantize: m must be >= 1");
    return std::floor(static_cast<double>(m) * x) / static_cast<double>(m);
}

Eigen::VectorXd quantize(const Eigen::VectorXd& x, int m) {
    Eigen::VectorXd out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = quantize_value(x(i), m);
    return out;
}

std::int64_t quantize_cell(double x, int m) {
    if (m < 1) throw std::invalid_argument("quantize: m must be >= 1");
    double v = std::floor(static_cast<double>(m) * x);
    if (!std::isfinite(v) || std::fabs(v) > 9.0e15) {
        throw std::invalid_argument("quantize: value out of lattice range");
    }
    return static_cast<std::int64_t>(v);
}

double empirical_entropy_bits(std::vector<std::int64_t>& keys, EntropyEstimator estimator) {
    return entropy_of_sorted_keys(keys, estimator);
}

double empirical_entropy_bits(std::vector<std::array<std::int64_t, 3>>& keys,
                              EntropyEstimator estimator) {
    return entropy_of_sorted_keys(keys, estimator);
}

VectorSampler sampler_from_distribution(const DceDistribution& dist) {
    VectorSampler s;
    s.dim = 1;
    s.fill = [dist](RngStream& rng, double* out) { out[0] = dist.draw(rng).first; };
    return s;
}

RidResult estimate_rid(const VectorSampler& sampler, const std::vector<int>& m_grid,
                       std::int64_t samples_per_m, std::uint64_t seed,
                       EntropyEstimator estimator) {
    if (sampler.dim < 1 || sampler.dim > 3) {
        throw std::invalid_argument("estimate_rid: sampler dimension must be 1..3");
    }
    if (m_grid.size() < 4) {
        throw DegenerateGrid("estimate_rid: need at least 4 grid points");
    }
    for (std::size_t i = 0; i < m_grid.size(); ++i) {
        if (!is_power_of_two(m_grid[i])) {
            throw DegenerateGrid("estimate_rid: m grid must be powers of two");
        }
        if (i > 0 && m_grid[i] <= m_grid[i - 1]) {
            throw DegenerateGrid("estimate_rid: m grid must be strictly increasing");
        }
    }
    if (samples_per_m < 1) throw std::invalid_argument("estimate_rid: samples_per_m < 1");

    RidResult result;
    result.curve.dimension = sampler.dim;
    std::array<double, 3> draw{};
    std::vector<std::array<std::int64_t, 3>> keys;
    keys.reserve(static_cast<std::size_t>(samples_per_m));
    for (std::size_t mi = 0; mi < m_grid.size(); ++mi) {
        const int m = m_grid[mi];
        RngStream rng = RngStream::substream(seed, mi);
        keys.clear();
        for (std::int64_t s = 0; s < samples_per_m; ++s) {
            sampler.fill(rng, draw.data());
            std::array<std::int64_t, 3> key{0, 0, 0};
            for (int d = 0; d < sampler.dim; ++d) key[static_cast<std::size_t>(d)] = quantize_cell(draw[static_cast<std::size_t>(d)], m);
            keys.push_back(key);
        }
        double h = empirical_entropy_bits(keys, estimator);
        result.curve.points.push_back({m, h, samples_per_m});
    }

    // regression over the top half of the grid (asymptotic regime)
    const std::size_t total = result.curve.points.size();
    const std::size_t start = total / 2;
    const std::size_t k = total - start;
    if (k < 2) throw DegenerateGrid("estimate_rid: fewer than 2 usable points");
    double sx = 0, sy = 0;
    for (std::size_t i = start; i < total; ++i) {
        sx += std::log2(static_cast<double>(result.curve.points[i].m));
        sy += result.curve.points[i].entropy_bits;
    }
    const double xbar = sx / static_cast<double>(k);
    const double ybar = sy / static_cast<double>(k);
    double sxx = 0, sxy = 0;
    for (std::size_t i = start; i < total; ++i) {
        double dx = std::log2(static_cast<double>(result.curve.points[i].m)) - xbar;
        sxx += dx * dx;
        sxy += dx * (result.curve.points[i].entropy_bits - ybar);
    }
    const double slope = sxy / sxx;
    double ssr = 0;
    for (std::size_t i = start; i < total; ++i) {
        double dx = std::log2(static_cast<double>(result.curve.points[i].m)) - xbar;
        double r = (result.curve.points[i].entropy_bits - ybar) - slope * dx;
        ssr += r * r;
    }
    result.estimate.slope = slope;
    result.estimate.stderr_ =
        k > 2 ? std::sqrt(ssr / static_cast<double>(k - 2) / sxx) : 0.0;
    result.estimate.m_lo = result.curve.points[start].m;
    result.estimate.m_hi = result.curve.points[total - 1].m;
    result.estimate.method = estimator;
    return result;
}

double estimate_bid_oracle(const ArmaModel& model, int n, int trials, std::uint64_t seed) {
    if (n < model.p + 1) throw BlockTooShort("estimate_bid_oracle: n must be >= p+1");
    if (trials < 1) throw std::invalid_argument("estimate_bid_oracle: trials < 1");
    const double alpha = model.excitation.alpha();
    const int rows = n - model.p;
    const int window = n + model.q - model.p;
    std::vector<double> band(static_cast<std::size_t>(model.q) + 1);
    band[0] = 1.0;
    for (int j = 1; j <= model.q; ++j) band[static_cast<std::size_t>(j)] = model.theta[static_cast<std::size_t>(j - 1)];

    auto per_trial = [&](int t) -> std::int64_t {
        RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(t));
        std::vector<unsigned char> nu(static_cast<std::size_t>(window));
        for (auto& f : nu) f = rng.bernoulli(alpha) ? 1 : 0;
        return model.p + banded_selection_rank(band, rows, nu);
    };
    std::int64_t sum = parallel_trials<std::int64_t>(
        trials, 0, per_trial, [](std::int64_t& acc, std::int64_t v) { acc += v; });
    return static_cast<double>(sum) / static_cast<double>(trials) / static_cast<double>(n);
}

BidBounds bid_bounds(int m, int p, int q, double alpha) {
    if (m < 1) throw std::invalid_argument("bid_bounds: m must be >= 1");
    BidBounds b;
    const double denom = static_cast<double>(m + p);
    b.lower = static_cast<double>(m) * alpha / denom;
    double u1 = (static_cast<double>(p + q) + static_cast<double>(m) * alpha) / denom;
    double u2 = (static_cast<double>(m + q) * alpha + static_cast<double>(p)) / denom;
    b.upper = std::min(u1, u2);
    return b;
}

std::vector<IdrPoint> estimate_idr(const ArmaModel& model, int m,
                                   const std::vector<int>& n_grid,
                                   std::int64_t samples, std::uint64_t seed) {
    if (m < 2 || m > 64) throw std::invalid_argument("estimate_idr: m must be in 2..64");
    if (n_grid.empty() || n_grid.size() > 3) {
        throw std::invalid_argument("estimate_idr: n_grid needs 1..3 entries");
    }
    std::vector<IdrPoint> out;
    for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
        const int n = n_grid[gi];
        if (n < 1 || n > 3) throw std::invalid_argument("estimate_idr: each n must be 1..3");
        double cells = std::pow(static_cast<double>(m), n);
        if (cells > 1e6) throw SampleStarvation("estimate_idr: m^n exceeds 1e6 cells");
        if (static_cast<double>(samples) < 100.0 * cells) {
            throw SampleStarvation("estimate_idr: need at least 100 m^n samples");
        }
        RngStream rng = RngStream::substream(seed, gi);
        std::vector<std::array<std::int64_t, 3>> keys;
        keys.reserve(static_cast<std::size_t>(samples));
        for (std::int64_t s = 0; s < samples; ++s) {
            SamplePath path = simulate_path(model, n, rng);
            std::array<std::int64_t, 3> key{0, 0, 0};
            for (int d = 0; d < n; ++d) key[static_cast<std::size_t>(d)] = quantize_cell(path.x[static_cast<std::size_t>(d)], m);
            keys.push_back(key);
        }
        double h = empirical_entropy_bits(keys);
        out.push_back({n, h / (static_cast<double>(n) * std::log2(static_cast<double>(m))),
                       samples});
    }
    return out;
}

double bernoulli_kl(double r, double alpha) {
    if (!(r >= 0.0 && r <= 1.0) || !(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("bernoulli_kl: arguments must be in [0,1]");
    }
    if (r == alpha) return 0.0;
    if (alpha <= 0.0 || alpha >= 1.0) return std::numeric_limits<double>::infinity();
    double acc = 0.0;
    if (r > 0.0) acc += r * std::log(r / alpha);
    if (r < 1.0) acc += (1.0 - r) * std::log((1.0 - r) / (1.0 - alpha));
    return acc;
}

ConcentrationBounds concentration_bounds(int n, int p, int q, double alpha, int k,
                                         ConcentrationVariant variant) {
    if (n <= p) throw std::invalid_argument("concentration_bounds: need n > p");
    ConcentrationBounds out;
    const double window = static_cast<double>(n + q - p);
    const double above_arg =
        variant == ConcentrationVariant::TheoremStatement
            ? static_cast<double>(k + q - p) / window
            : static_cast<double>(k + q) / window;
    const double below_arg = variant == ConcentrationVariant::TheoremStatement
                                 ? static_cast<double>(k - p) / static_cast<double>(n - p)
                                 : static_cast<double>(k) / static_cast<double>(n - p);
    if (above_arg >= 0.0 && above_arg < alpha) {
        out.regime = ConcentrationRegime::Above;
        out.p_above = 1.0 - std::exp(-window * bernoulli_kl(above_arg, alpha));
    } else if (below_arg <= 1.0 && below_arg > alpha) {
        out.regime = ConcentrationRegime::Below;
        out.p_below = 1.0 - std::exp(-window * bernoulli_kl(below_arg, alpha));
    } else {
        out.regime = ConcentrationRegime::Void;
    }
    return out;
}

int min_n_for_concentration(int p, int q, double alpha, double eps, double delta) {
    if (!(delta > 0.0) || !(delta < std::min(alpha, 1.0 - alpha))) {
        throw InvalidBand("min_n_for_concentration: need 0 < delta < min(alpha, 1-alpha)");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidBand("min_n_for_concentration: need eps in (0,1)");
    }
    const double neg_log = -std::log(eps / 2.0);
    const double t1 =
        2.0 * (static_cast<double>(q) * (1.0 + delta / 2.0 - alpha) - static_cast<double>(p)) /
        delta;
    const double t2 = neg_log / bernoulli_kl(alpha - delta / 2.0, alpha) - static_cast<double>(q);
    const double t3 = 2.0 * static_cast<double>(p) / delta;
    const double t4 = neg_log / bernoulli_kl(alpha + delta / 2.0, alpha) - static_cast<double>(q);
    double n = std::ceil(std::max({t1, t2, t3, t4}));
    return std::max(static_cast<int>(n), p + 2);
}

ShiftedEntropyReport shifted_entropy_check(const DceDistribution& dist,
                                           const std::vector<double>& eps_grid,
                                           std::int64_t samples, std::uint64_t seed,
                                           double slack_bits) {
    if (samples < 1) throw std::invalid_argument("shifted_entropy_check: samples < 1");
    for (double e : eps_grid) {
        if (!(e > -1.0 && e < 1.0)) {
            throw std::invalid_argument("shifted_entropy_check: eps must lie in (-1,1)");
        }
    }
    RngStream rng = RngStream::substream(seed, 0);
    std::vector<double> x(static_cast<std::size_t>(samples));
    for (auto& v : x) v = dist.draw(rng).first;

    std::vector<std::int64_t> keys(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) keys[i] = quantize_cell(x[i], 1);
    ShiftedEntropyReport report;
    report.m_hat = empirical_entropy_bits(keys);

    int c = 0;
    for (;; ++c) {
        std::int64_t outside = 0;
        for (double v : x) {
            if (std::fabs(v) > static_cast<double>(c)) ++outside;
        }
        if (static_cast<double>(outside) < 0.25 * static_cast<double>(samples)) break;
        if (c > 1000000) throw std::runtime_error("shifted_entropy_check: heavy tail");
    }
    report.c = c;
    report.C = std::log2(static_cast<double>(c) + 1.0) - 8.0 / 3.0;

    const double bound = 4.0 * report.m_hat + report.C;
    for (double e : eps_grid) {
        for (std::size_t i = 0; i < x.size(); ++i) keys[i] = quantize_cell(x[i] + e, 1);
        double lhs = empirical_entropy_bits(keys);
        report.points.push_back({e, lhs, bound, lhs <= bound + slack_bits});
    }
    return report;
}

double continuity_chance_bound(double d, int p, int t, int i0) {
    if (t < i0) throw std::invalid_argument("continuity_chance_bound: need t >= i0");
    if (!(d >= 0.0 && d <= 1.0)) {
        throw std::invalid_argument("continuity_chance_bound: d must be in [0,1]");
    }
    if (p < 0) throw std::invalid_argument("continuity_chance_bound: p must be >= 0");
    return 1.0 - std::pow(1.0 - std::pow(d, p), t - i0);
}

} // namespace dcearma
