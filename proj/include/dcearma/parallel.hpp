#ifndef DCEARMA_PARALLEL_HPP
#define DCEARMA_PARALLEL_HPP

#include <thread>
#include <vector>

namespace dcearma {

/// Run `fn(index)` for index in [0, total) across hardware threads and merge
/// the per-chunk results in chunk order. Each trial must derive its own RNG
/// substream from the trial index, so results do not depend on the split.
/// Merges used here are exact (integer tallies), keeping output identical
/// for any thread count.
template <typename Result, typename PerTrial, typename Merge>
Result parallel_trials(int total, Result init, PerTrial fn, Merge merge) {
    unsigned hw = std::thread::hardware_concurrency();
    int chunks = static_cast<int>(hw == 0 ? 1 : hw);
    if (chunks > total) chunks = total > 0 ? total : 1;
    if (chunks <= 1) {
        Result acc = init;
        for (int t = 0; t < total; ++t) merge(acc, fn(t));
        return acc;
    }
    std::vector<Result> partial(static_cast<std::size_t>(chunks), init);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(chunks));
    for (int c = 0; c < chunks; ++c) {
        int begin = static_cast<int>(static_cast<long long>(total) * c / chunks);
        int end = static_cast<int>(static_cast<long long>(total) * (c + 1) / chunks);
        threads.emplace_back([&, begin, end, c]() {
            Result local = init;
            for (int t = begin; t < end; ++t) merge(local, fn(t));
            partial[static_cast<std::size_t>(c)] = std::move(local);
        });
    }
    for (auto& th : threads) th.join();
    Result acc = init;
    for (auto& part : partial) merge(acc, part);
    return acc;
}

} // namespace dcearma

#endif
