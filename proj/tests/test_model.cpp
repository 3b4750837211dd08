#include <doctest.h>

#include <cmath>
#include <limits>

#include "dcearma/errors.hpp"
#include "dcearma/model.hpp"
#include "dcearma/path.hpp"
#include "test_util.hpp"

using namespace dcearma;

namespace {
const DceDistribution kGauss = DceDistribution::continuous_only(GaussianSpec{});
}

TEST_CASE("pure MA is always stable with empty pole list") {
    ArmaModel model = ArmaModel::ma({0.5, -0.2}, kGauss);
    auto report = validate_model(model);
    CHECK(report.stable);
    CHECK(report.pole_moduli.empty());
}

TEST_CASE("AR(1) with phi = -1/3 has pole modulus 1/3") {
    ArmaModel model = ArmaModel::ar({-1.0 / 3.0}, kGauss);
    auto report = validate_model(model);
    CHECK(report.stable);
    REQUIRE(report.pole_moduli.size() == 1);
    CHECK(report.pole_moduli[0] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("AR(1) with phi = -1.5 is unstable") {
    ArmaModel model = ArmaModel::ar({-1.5}, kGauss);
    auto report = validate_model(model);
    CHECK_FALSE(report.stable);
    REQUIRE(report.pole_moduli.size() == 1);
    CHECK(report.pole_moduli[0] == doctest::Approx(1.5));
}

TEST_CASE("non-finite coefficients are rejected") {
    ArmaModel model = ArmaModel::ar({std::numeric_limits<double>::quiet_NaN()}, kGauss);
    CHECK_THROWS_AS(validate_model(model), NonFiniteCoefficient);
    ArmaModel model2(0, 1, {}, {std::numeric_limits<double>::infinity()}, kGauss);
    CHECK_THROWS_AS(validate_model(model2), NonFiniteCoefficient);
}

TEST_CASE("pole moduli are sorted descending") {
    RngStream rng(5);
    for (int t = 0; t < 20; ++t) {
        auto model = testutil::random_stable_model(4, 0, 1.0, rng);
        auto report = validate_model(model);
        for (std::size_t i = 1; i < report.pole_moduli.size(); ++i) {
            CHECK(report.pole_moduli[i - 1] >= report.pole_moduli[i] - 1e-12);
        }
    }
}

TEST_CASE("FIR impulse response is the theta sequence") {
    ArmaModel model = ArmaModel::ma({0.5, -0.2}, kGauss);
    auto h = impulse_response(model, 5);
    CHECK(h[0] == 1.0);
    CHECK(h[1] == 0.5);
    CHECK(h[2] == -0.2);
    CHECK(h[3] == 0.0);
    CHECK(h[4] == 0.0);
    CHECK(h[5] == 0.0);
}

TEST_CASE("AR(1) pole 1/3 gives the geometric response 3^-n") {
    ArmaModel model = ArmaModel::ar({-1.0 / 3.0}, kGauss);
    auto h = impulse_response(model, 20);
    for (int n = 0; n <= 20; ++n) {
        CHECK(h[static_cast<std::size_t>(n)] == doctest::Approx(std::pow(3.0, -n)).epsilon(1e-12));
    }
}

TEST_CASE("ARMA(1,1) closed form h[n] = (theta_1 - phi_1)(-phi_1)^(n-1)") {
    ArmaModel model(1, 1, {-1.0 / 3.0}, {1.0}, kGauss);
    auto h = impulse_response(model, 12);
    CHECK(h[0] == 1.0);
    for (int n = 1; n <= 12; ++n) {
        double expected = (1.0 + 1.0 / 3.0) * std::pow(1.0 / 3.0, n - 1);
        CHECK(h[static_cast<std::size_t>(n)] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("impulse response satisfies its defining recursion and decays") {
    RngStream rng(17);
    for (int t = 0; t < 25; ++t) {
        int p = 1 + static_cast<int>(rng.below(4));
        int q = static_cast<int>(rng.below(4));
        auto model = testutil::random_stable_model(p, q, 1.0, rng);
        const int N = 200;
        auto h = impulse_response(model, N);
        for (int n = 1; n <= N; ++n) {
            double expected = n <= model.q ? model.theta[static_cast<std::size_t>(n - 1)] : 0.0;
            for (int i = 1; i <= std::min(n, model.p); ++i) {
                expected -= model.phi[static_cast<std::size_t>(i - 1)] *
                            h[static_cast<std::size_t>(n - i)];
            }
            REQUIRE(h[static_cast<std::size_t>(n)] == doctest::Approx(expected).epsilon(1e-12));
        }
        // empirical geometric envelope |h[n]| <= C rho^n
        double rho = max_pole_modulus(model) + 1e-6;
        double c_needed = 0.0;
        for (int n = 0; n <= N; ++n) {
            double envelope = std::pow(rho, n);
            if (envelope > 0.0) {
                c_needed = std::max(c_needed, std::fabs(h[static_cast<std::size_t>(n)]) / envelope);
            }
        }
        CHECK(c_needed < 1e6);
    }
}

TEST_CASE("default burn-in follows the slowest pole") {
    ArmaModel iid = ArmaModel::iid(kGauss);
    CHECK(default_burn_in(iid) == 0);
    ArmaModel ar1 = ArmaModel::ar({-1.0 / 3.0}, kGauss);
    CHECK(default_burn_in(ar1) == static_cast<int>(std::ceil(60.0 / std::log(3.0))));
    // pole extremely close to 1 hits the cap
    ArmaModel slow = ArmaModel::ar({-(1.0 - 1e-13) + 0.0}, kGauss);
    CHECK_FALSE(validate_model(slow).stable);
}
