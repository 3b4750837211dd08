#ifndef DCEARMA_RNG_HPP
#define DCEARMA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace dcearma {

/// Counter-based random stream built on the splitmix64 mixing function.
///
/// Every Monte Carlo trial gets its own stream via substream(master, id),
/// so trials are reproducible independently of execution order and can
/// run on any number of threads without shared state.
class RngStream {
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed) : counter_(seed), spare_valid_(false) {}

    /// Derive the stream for trial `id` of the run keyed by `master`.
    static RngStream substream(std::uint64_t master, std::uint64_t id) {
        std::uint64_t s = mix(master + 0x9e3779b97f4a7c15ULL * (id + 1));
        return RngStream(mix(s ^ 0xbf58476d1ce4e5b9ULL));
    }

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ULL;
        return mix(counter_);
    }

    // UniformRandomBitGenerator interface
    result_type operator()() { return next_u64(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    /// Uniform on [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal via Marsaglia's polar method (second value cached).
    double normal() {
        if (spare_valid_) {
            spare_valid_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        spare_valid_ = true;
        return u * f;
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift rejection-free mapping; bias < 2^-64, irrelevant here
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t counter_;
    double spare_ = 0.0;
    bool spare_valid_;
};

} // namespace dcearma

#endif
