#include <doctest.h>

#include <cmath>

#include "dcearma/distribution.hpp"
#include "dcearma/rng.hpp"

using namespace dcearma;

TEST_CASE("invariants are enforced") {
    CHECK_THROWS_AS(DceDistribution(-0.1, {{0.0, 1.0}}, GaussianSpec{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DceDistribution(0.5, {{0.0, 0.5}}, GaussianSpec{}),
                    std::invalid_argument); // weights must sum to 1
    CHECK_THROWS_AS(DceDistribution(0.5, {{0.0, 0.5}, {0.0, 0.5}}, GaussianSpec{}),
                    std::invalid_argument); // distinct atom values
    CHECK_THROWS_AS(DceDistribution(0.5, {{0.0, 1.0}}, GaussianSpec{0.0, -1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DceDistribution(0.5, {{0.0, 1.0}}, UniformSpec{2.0, 1.0}),
                    std::invalid_argument);
    // degenerate ends are fine with empty complements
    CHECK_NOTHROW(DceDistribution::continuous_only(GaussianSpec{}));
    CHECK_NOTHROW(DceDistribution::rademacher());
}

TEST_CASE("rademacher excitation is purely discrete") {
    auto dist = DceDistribution::rademacher();
    RngStream rng(11);
    auto sample = sample_excitation(dist, 5000, rng);
    for (std::size_t i = 0; i < sample.xi.size(); ++i) {
        CHECK(sample.nu[i] == 0);
        CHECK((sample.xi[i] == 1.0 || sample.xi[i] == -1.0));
    }
}

TEST_CASE("pure gaussian excitation is all-continuous") {
    auto dist = DceDistribution::continuous_only(GaussianSpec{});
    RngStream rng(12);
    auto sample = sample_excitation(dist, 1000, rng);
    for (auto f : sample.nu) CHECK(f == 1);
}

TEST_CASE("bernoulli-gaussian flags follow the binomial band") {
    auto dist = DceDistribution::bernoulli_gaussian(0.5);
    RngStream rng(13);
    const int count = 40000;
    auto sample = sample_excitation(dist, count, rng);
    double frac = 0.0;
    for (auto f : sample.nu) frac += f;
    frac /= count;
    // 3 sigma binomial band around alpha
    CHECK(std::fabs(frac - 0.5) < 3.0 * std::sqrt(0.25 / count));
    for (std::size_t i = 0; i < sample.xi.size(); ++i) {
        if (!sample.nu[i]) CHECK(sample.xi[i] == 0.0);
    }
}

TEST_CASE("flag rate stays inside 4 sigma for several alphas") {
    for (double alpha : {0.1, 0.3, 0.7, 0.9}) {
        auto dist = DceDistribution::bernoulli_gaussian(alpha);
        RngStream rng(static_cast<std::uint64_t>(alpha * 1000));
        const int count = 20000;
        auto sample = sample_excitation(dist, count, rng);
        double frac = 0.0;
        for (auto f : sample.nu) frac += f;
        frac /= count;
        CHECK(std::fabs(frac - alpha) < 4.0 * std::sqrt(alpha * (1 - alpha) / count));
    }
}

TEST_CASE("sum of two single-atom mixtures") {
    auto d1 = DceDistribution::bernoulli_gaussian(0.5);
    auto d2 = DceDistribution::bernoulli_gaussian(0.5);
    auto sum = compose_sum_distribution(d1, d2);
    CHECK(sum.alpha() == doctest::Approx(0.75));
    REQUIRE(sum.atoms().size() == 1);
    CHECK(sum.atoms()[0].value == 0.0);
    CHECK(sum.atoms()[0].weight == doctest::Approx(1.0));
}

TEST_CASE("pure continuous absorbs any summand") {
    auto d1 = DceDistribution::continuous_only(GaussianSpec{});
    auto d2 = DceDistribution::rademacher();
    auto sum = compose_sum_distribution(d1, d2);
    CHECK(sum.alpha() == 1.0);
}

TEST_CASE("rademacher + rademacher convolves atoms exactly") {
    auto d = DceDistribution::rademacher();
    auto sum = compose_sum_distribution(d, d);
    CHECK(sum.alpha() == 0.0);
    REQUIRE(sum.atoms().size() == 3);
    double w_minus2 = 0, w_0 = 0, w_plus2 = 0;
    for (const auto& a : sum.atoms()) {
        if (a.value == -2.0) w_minus2 = a.weight;
        if (a.value == 0.0) w_0 = a.weight;
        if (a.value == 2.0) w_plus2 = a.weight;
    }
    CHECK(w_minus2 == doctest::Approx(0.25));
    CHECK(w_0 == doctest::Approx(0.5));
    CHECK(w_plus2 == doctest::Approx(0.25));
}

TEST_CASE("composed alpha dominates both inputs and weights stay normalized") {
    RngStream rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        double a1 = rng.uniform01() * 0.99;
        double a2 = rng.uniform01() * 0.99;
        auto d1 = DceDistribution(a1, {{-1.0, 0.25}, {0.5, 0.75}}, GaussianSpec{});
        auto d2 = DceDistribution(a2, {{0.0, 0.5}, {2.0, 0.5}}, GaussianSpec{});
        auto sum = compose_sum_distribution(d1, d2);
        CHECK(sum.alpha() >= std::max(a1, a2) - 1e-15);
        CHECK(sum.alpha() == doctest::Approx(1.0 - (1.0 - a1) * (1.0 - a2)));
        double total = 0.0;
        for (const auto& atom : sum.atoms()) total += atom.weight;
        CHECK(total == doctest::Approx(1.0));
    }
}

TEST_CASE("sum law sampling respects its continuity chance") {
    auto d1 = DceDistribution::bernoulli_gaussian(0.5);
    auto d2 = DceDistribution::bernoulli_gaussian(0.5);
    auto sum = compose_sum_distribution(d1, d2);
    RngStream rng(7);
    const int count = 40000;
    auto sample = sample_excitation(sum, count, rng);
    double frac = 0.0;
    for (auto f : sample.nu) frac += f;
    frac /= count;
    CHECK(std::fabs(frac - 0.75) < 4.0 * std::sqrt(0.75 * 0.25 / count));
}
