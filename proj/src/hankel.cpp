#include "dcearma/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcearma/errors.hpp"
#include "dcearma/linalg.hpp"

namespace dcearma {

namespace {

constexpr double kCancelTol = 1e-10;

bool match(const std::complex<double>& a, const std::complex<double>& b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= kCancelTol * scale;
}

// coefficients of prod (1 - r_j w), ascending in w
std::vector<double> expand_one_minus(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> poly{1.0};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= r * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<double> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) out[i] = poly[i].real();
    return out;
}

} // namespace

RationalFilter::RationalFilter(std::vector<std::complex<double>> zeros,
                               std::vector<std::complex<double>> poles, double gain)
    : zeros_(std::move(zeros)), poles_(std::move(poles)), gain_(gain) {
    if (!std::isfinite(gain_) || gain_ == 0.0) {
        throw std::invalid_argument("RationalFilter: gain must be finite and nonzero");
    }
    // cancel removable pole/zero pairs
    for (std::size_t i = 0; i < poles_.size();) {
        bool cancelled = false;
        for (std::size_t j = 0; j < zeros_.size(); ++j) {
            if (match(poles_[i], zeros_[j])) {
                poles_.erase(poles_.begin() + static_cast<std::ptrdiff_t>(i));
                zeros_.erase(zeros_.begin() + static_cast<std::ptrdiff_t>(j));
                cancelled = true;
                break;
            }
        }
        if (!cancelled) ++i;
    }
    if (zeros_.size() > poles_.size()) {
        throw std::invalid_argument("RationalFilter: improper (more zeros than poles)");
    }
    for (const auto& z : poles_) {
        if (std::abs(z) <= kCancelTol) {
            ++zero_pole_count_;
        } else {
            ++nonzero_pole_count_;
        }
    }
}

RationalFilter RationalFilter::from_model(const ArmaModel& model) {
    auto poles = monic_roots(model.phi);
    auto zeros = monic_roots(model.theta);
    if (model.p > model.q) {
        zeros.insert(zeros.end(), static_cast<std::size_t>(model.p - model.q), 0.0);
    } else if (model.q > model.p) {
        poles.insert(poles.end(), static_cast<std::size_t>(model.q - model.p), 0.0);
    }
    return RationalFilter(std::move(zeros), std::move(poles), 1.0);
}

double RationalFilter::max_pole_modulus() const {
    double m = 0.0;
    for (const auto& z : poles_) m = std::max(m, std::abs(z));
    return m;
}

std::vector<double> RationalFilter::impulse_response(int N) const {
    if (N < 0) throw std::invalid_argument("impulse_response: N must be >= 0");
    // H(z) = gain * w^(P-Z) * prod(1 - r_j w) / prod(1 - a_i w), w = 1/z
    const int shift = static_cast<int>(poles_.size() - zeros_.size());
    std::vector<double> num = expand_one_minus(zeros_);
    std::vector<double> den = expand_one_minus(poles_);
    std::vector<double> h(static_cast<std::size_t>(N) + 1, 0.0);
    for (int n = 0; n <= N; ++n) {
        double v = 0.0;
        int k = n - shift;
        if (k >= 0 && k < static_cast<int>(num.size())) {
            v = gain_ * num[static_cast<std::size_t>(k)];
        }
        int imax = std::min<int>(n, static_cast<int>(den.size()) - 1);
        for (int i = 1; i <= imax; ++i) {
            v -= den[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(n - i)];
        }
        h[static_cast<std::size_t>(n)] = v;
    }
    return h;
}

Eigen::MatrixXd hankel_from_impulse(const std::vector<double>& h, int size, int offset) {
    if (size < 0 || offset < 0) {
        throw std::invalid_argument("hankel_from_impulse: size and offset must be >= 0");
    }
    if (size > 0 && offset + 2 * (size - 1) >= static_cast<int>(h.size())) {
        throw InsufficientImpulseLength("hankel_from_impulse: need h up to index " +
                                        std::to_string(offset + 2 * (size - 1)));
    }
    Eigen::MatrixXd m(size, size);
    for (int j = 0; j < size; ++j) {
        for (int k = 0; k < size; ++k) {
            m(j, k) = h[static_cast<std::size_t>(offset + j + k)];
        }
    }
    return m;
}

HankelCheck check_hankel_nonsingular(const RationalFilter& filter) {
    const int s = filter.total_pole_count();
    HankelCheck out;
    if (s == 0) {
        // no poles at all: 0x0 Hankel, vacuously nonsingular
        out.det_estimate = 1.0;
        out.nonsingular = true;
        return out;
    }
    auto h = filter.impulse_response(2 * s - 2);
    Eigen::MatrixXd m = hankel_from_impulse(h, s, 0);
    out.det_estimate = m.determinant();
    auto [smin, smax] = extreme_singular_values(m);
    out.nonsingular = smax > 0.0 && smin / smax > kRankThreshold;
    return out;
}

int shifted_hankel_threshold(const RationalFilter& filter) {
    const int p = filter.nonzero_pole_count();
    if (p < 1) {
        throw IndexBelowThreshold("shifted_hankel: filter has no nonzero poles");
    }
    const int pp = filter.zero_pole_count();
    return (pp + 1 + p - 1) / p + 1; // ceil((p'+1)/p) + 1
}

ShiftedHankelResult shifted_hankel_full_rank(const RationalFilter& filter, int i) {
    const int threshold = shifted_hankel_threshold(filter);
    if (i < threshold) {
        throw IndexBelowThreshold("shifted_hankel: i=" + std::to_string(i) +
                                  " below lemma threshold " + std::to_string(threshold));
    }
    const int p = filter.nonzero_pole_count();
    const int offset = i * p - p - 1;
    auto h = filter.impulse_response(offset + 2 * (p - 1));
    Eigen::MatrixXd m = hankel_from_impulse(h, p, offset);
    ShiftedHankelResult out;
    out.size = p;
    out.rank = numerical_rank(m);
    out.full = out.rank == p;
    return out;
}

IntHistogram random_column_rank_distribution(const Eigen::MatrixXd& mat, double alpha,
                                             int trials, RngStream& rng) {
    if (trials < 1) {
        throw std::invalid_argument("random_column_rank_distribution: trials must be >= 1");
    }
    IntHistogram hist;
    const int cols = static_cast<int>(mat.cols());
    std::vector<int> selected;
    selected.reserve(static_cast<std::size_t>(cols));
    for (int t = 0; t < trials; ++t) {
        selected.clear();
        for (int c = 0; c < cols; ++c) {
            if (rng.bernoulli(alpha)) selected.push_back(c);
        }
        Eigen::MatrixXd sub(mat.rows(), static_cast<Eigen::Index>(selected.size()));
        for (std::size_t j = 0; j < selected.size(); ++j) {
            sub.col(static_cast<Eigen::Index>(j)) = mat.col(selected[j]);
        }
        hist.add(numerical_rank(sub));
    }
    return hist;
}

RationalFilter random_stable_filter(int nonzero_poles, int origin_poles, RngStream& rng) {
    if (nonzero_poles < 0 || origin_poles < 0) {
        throw std::invalid_argument("random_stable_filter: counts must be >= 0");
    }
    auto sample_set = [&rng](int count) {
        std::vector<std::complex<double>> out;
        while (static_cast<int>(out.size()) < count) {
            int remaining = count - static_cast<int>(out.size());
            double mod = rng.uniform(0.1, 0.9);
            if (remaining >= 2 && rng.bernoulli(0.5)) {
                double angle = rng.uniform(0.05, M_PI - 0.05);
                std::complex<double> z = std::polar(mod, angle);
                out.push_back(z);
                out.push_back(std::conj(z));
            } else {
                out.push_back(rng.bernoulli(0.5) ? mod : -mod);
            }
        }
        return out;
    };

    for (int attempt = 0; attempt < 256; ++attempt) {
        auto poles = sample_set(nonzero_poles);
        auto zeros = sample_set(nonzero_poles);
        bool removable = false;
        for (const auto& a : poles) {
            for (const auto& r : zeros) {
                if (std::abs(a - r) < 1e-6) removable = true;
            }
        }
        if (removable) continue;
        poles.insert(poles.end(), static_cast<std::size_t>(origin_poles), 0.0);
        double gain = rng.uniform(0.5, 2.0);
        return RationalFilter(std::move(zeros), std::move(poles), gain);
    }
    throw std::runtime_error("random_stable_filter: rejection sampling failed");
}

} // namespace dcearma
