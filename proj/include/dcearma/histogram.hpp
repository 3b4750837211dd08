#ifndef DCEARMA_HISTOGRAM_HPP
#define DCEARMA_HISTOGRAM_HPP

#include <cstdint>
#include <map>

namespace dcearma {

/// Integer-keyed tally with an associative merge, so parallel trial chunks
/// can be combined in any order.
struct IntHistogram {
    std::map<int, std::int64_t> counts;
    std::int64_t total = 0;

    void add(int key, std::int64_t count = 1) {
        counts[key] += count;
        total += count;
    }

    void merge(const IntHistogram& other) {
        for (const auto& [k, c] : other.counts) counts[k] += c;
        total += other.total;
    }

    double mean() const {
        if (total == 0) return 0.0;
        double acc = 0.0;
        for (const auto& [k, c] : counts) acc += static_cast<double>(k) * static_cast<double>(c);
        return acc / static_cast<double>(total);
    }

    /// Fraction of mass with key strictly greater than k.
    double tail_above(int k) const {
        if (total == 0) return 0.0;
        std::int64_t acc = 0;
        for (const auto& [key, c] : counts) {
            if (key > k) acc += c;
        }
        return static_cast<double>(acc) / static_cast<double>(total);
    }

    /// Fraction of mass with key strictly less than k.
    double tail_below(int k) const {
        if (total == 0) return 0.0;
        std::int64_t acc = 0;
        for (const auto& [key, c] : counts) {
            if (key < k) acc += c;
        }
        return static_cast<double>(acc) / static_cast<double>(total);
    }
};

} // namespace dcearma

#endif
