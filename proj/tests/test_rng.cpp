#include <doctest.h>

#include <cmath>
#include <set>

#include "dcearma/rng.hpp"

using namespace dcearma;

TEST_CASE("same seed reproduces the stream") {
    RngStream a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("substreams are stable and distinct") {
    auto s1 = RngStream::substream(7, 0);
    auto s2 = RngStream::substream(7, 0);
    auto s3 = RngStream::substream(7, 1);
    CHECK(s1.next_u64() == s2.next_u64());
    CHECK(s1.next_u64() != s3.next_u64());

    std::set<std::uint64_t> firsts;
    for (std::uint64_t id = 0; id < 1000; ++id) {
        firsts.insert(RngStream::substream(123, id).next_u64());
    }
    CHECK(firsts.size() == 1000);
}

TEST_CASE("uniform01 lies in [0,1) with mean near 1/2") {
    RngStream rng(1);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::fabs(sum / n - 0.5) < 0.005);
}

TEST_CASE("normal has unit variance") {
    RngStream rng(2);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double x = rng.normal();
        sum += x;
        sq += x * x;
    }
    double mean = sum / n;
    double var = sq / n - mean * mean;
    CHECK(std::fabs(mean) < 0.01);
    CHECK(std::fabs(var - 1.0) < 0.02);
}

TEST_CASE("bernoulli matches its rate") {
    RngStream rng(3);
    int hits = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) hits += rng.bernoulli(0.3) ? 1 : 0;
    CHECK(std::fabs(static_cast<double>(hits) / n - 0.3) < 0.01);
}
