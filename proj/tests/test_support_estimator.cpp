#include <doctest.h>

#include <cmath>
#include <random>

#include "maxent/oracle.hpp"
#include "maxent/support_estimator.hpp"

using namespace maxent;

TEST_CASE("delta0 for M=2 is linear with a root at the mean") {
    const auto p = delta0_polynomial(validate_moments({1.0, 3.0, 12.0}));
    REQUIRE(p.degree() == 1);
    const auto roots = real_simple_roots(p);
    CHECK(roots[0].value == doctest::Approx(3.0));
}

TEST_CASE("delta0 for the two-point law recovers the support points") {
    const auto p = delta0_polynomial(validate_moments({1.0, 1.0, 2.0, 4.0, 8.0}));
    REQUIRE(p.degree() == 2);
    // proportional to w^2 - 2w
    CHECK(p.coeffs[1] / p.coeffs[2] == doctest::Approx(-2.0));
    CHECK(p.coeffs[0] / p.coeffs[2] == doctest::Approx(0.0));
    const auto roots = real_simple_roots(p);
    CHECK(roots[0].value == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(roots[1].value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("delta0 is degenerate for a point mass") {
    CHECK_THROWS_AS(delta0_polynomial(validate_moments({1.0, 3.0, 9.0, 27.0, 81.0})),
                    DegeneratePolynomialError);
}

TEST_CASE("delta1 examples") {
    const auto mu = validate_moments({1.0, 1.0, 2.0, 4.0});
    const auto p = delta1_polynomial(mu, 0.0);
    REQUIRE(p.degree() == 1);
    auto roots = real_simple_roots(p);
    CHECK(roots[0].value == doctest::Approx(2.0));

    // with w1 at the mean, the root is (mu2 - w1 mu1)/(mu1 - w1 mu0)
    const double w1 = 0.4;
    const auto q = delta1_polynomial(mu, w1);
    roots = real_simple_roots(q);
    CHECK(roots[0].value == doctest::Approx((2.0 - w1 * 1.0) / (1.0 - w1 * 1.0)));

    // point mass at 2 makes every shifted moment vanish at w1 = 2
    CHECK_THROWS_AS(delta1_polynomial(validate_moments({1.0, 2.0, 4.0, 8.0}), 2.0),
                    DegeneratePolynomialError);
}

TEST_CASE("delta0 evaluation agrees with the direct determinant on random laws") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto law = (trial % 2 == 0)
                             ? oracle::ReferenceLaw::binomial(12, 0.2 + 0.6 * u(rng))
                             : oracle::ReferenceLaw::poisson(1.0 + 6.0 * u(rng));
        const auto mu = oracle::reference_moments(law, SupportWindow(0, 25), 4);
        const auto p = delta0_polynomial(mu);
        const int k = 2;
        for (double w : {0.3, 1.7, 4.9, 11.0}) {
            Eigen::MatrixXd full(k + 1, k + 1);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c <= k; ++c) full(r, c) = mu[r + c];
            for (int c = 0; c <= k; ++c) full(k, c) = std::pow(w, c);
            const double direct = determinant(full);
            CHECK(p.eval(w) == doctest::Approx(direct).epsilon(1e-9));
        }
    }
}

TEST_CASE("two-point support recovery for k = 1 and k = 2") {
    // k=1: point support of a one-point law is the mean
    const auto p1 = delta0_polynomial(validate_moments({1.0, 7.0, 49.5}));
    CHECK(real_simple_roots(p1)[0].value == doctest::Approx(7.0));

    // k=2: two-point law at {1, 5}, weights 1/4 and 3/4
    const double a = 1.0, b = 5.0, wa = 0.25;
    std::vector<double> mu(5);
    for (int k = 0; k <= 4; ++k) mu[static_cast<std::size_t>(k)] =
        wa * std::pow(a, k) + (1 - wa) * std::pow(b, k);
    const auto p2 = delta0_polynomial(validate_moments(mu));
    const auto roots = real_simple_roots(p2);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == doctest::Approx(a).epsilon(1e-9));
    CHECK(roots[1].value == doctest::Approx(b).epsilon(1e-9));
}

TEST_CASE("initial window from determinant roots") {
    SupportConfig cfg;
    CHECK(initial_window(validate_moments({1.0, 1.0, 2.0, 4.0, 8.0}), cfg) == SupportWindow(0, 2));
    CHECK(initial_window(validate_moments({1.0, 5.0, 26.0}), cfg) == SupportWindow(5, 5));
}

TEST_CASE("initial window falls back to the Chebyshev heuristic") {
    SupportConfig cfg;
    // degenerate determinant: point mass at 3 with M=4
    const auto mu = validate_moments({1.0, 3.0, 9.0, 27.0, 81.0});
    const auto w = initial_window(mu, cfg);
    CHECK(w == chebyshev_window(mu, cfg));
}

TEST_CASE("initial window contains the mean") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SupportConfig cfg;
    for (int trial = 0; trial < 20; ++trial) {
        const auto law = oracle::ReferenceLaw::poisson(0.5 + 8.0 * u(rng));
        for (int m : {2, 3, 4}) {
            const auto mu = oracle::reference_moments(law, SupportWindow(0, 40), m);
            const auto w = initial_window(mu, cfg);
            CHECK(w.left >= 0);
            CHECK(w.left <= w.right);
            const bool contains_mean = w.contains(static_cast<std::int64_t>(std::floor(mu[1]))) ||
                                       w.contains(static_cast<std::int64_t>(std::ceil(mu[1])));
            CHECK(contains_mean);
        }
    }
}

TEST_CASE("tail test") {
    SupportConfig cfg;
    cfg.delta_prob = 1e-3;
    CHECK_FALSE(tail_ok(FiniteDistribution(SupportWindow(0, 2), {0.5, 0.499, 0.001}), cfg));
    CHECK(tail_ok(FiniteDistribution(SupportWindow(0, 1), {1.0, 0.0}), cfg));

    // geometric shape on {0..40}: 2^-40 is far under 1e-3 of the peak
    std::vector<double> geo(41);
    for (int x = 0; x <= 40; ++x) geo[static_cast<std::size_t>(x)] = std::pow(2.0, -x);
    CHECK(tail_ok(FiniteDistribution::from_weights(SupportWindow(0, 40), geo), cfg));
}

TEST_CASE("tail test can also guard the left edge") {
    SupportConfig cfg;
    cfg.delta_prob = 1e-2;
    cfg.both_ends_tail = true;
    const FiniteDistribution q(SupportWindow(2, 4), {0.4, 0.5999, 0.0001});
    CHECK_FALSE(tail_ok(q, cfg));  // left edge fails at x_L = 2
    const FiniteDistribution anchored(SupportWindow(0, 2), {0.4, 0.5999, 0.0001});
    CHECK(tail_ok(anchored, cfg));  // x_L = 0 is exempt
}

TEST_CASE("one-state extension alternates ends") {
    CHECK(extend_one(SupportWindow(3, 7), 0) == SupportWindow(2, 7));
    CHECK(extend_one(SupportWindow(0, 7), 2) == SupportWindow(0, 7));  // clamped
    CHECK(extend_one(SupportWindow(3, 7), 1) == SupportWindow(3, 8));
    // the frozen-left even step leaves the left edge untouched
    CHECK(extend_one(SupportWindow(3, 7), 0, true) == SupportWindow(3, 7));
}

TEST_CASE("chebyshev window from the printed formula") {
    SupportConfig cfg;
    CHECK(cfg.xi == 0.1);
    CHECK(chebyshev_window(validate_moments({1.0, 3.0, 10.0}), cfg) == SupportWindow(0, 103));
    // second moment zero forces a point window at the origin
    CHECK(chebyshev_window(validate_moments({1.0, 0.0, 0.0}), cfg) == SupportWindow(0, 0));
}

TEST_CASE("block extension") {
    CHECK(extend_block(SupportWindow(5, 10), 4) == SupportWindow(3, 12));
    CHECK(extend_block(SupportWindow(1, 10), 6) == SupportWindow(0, 13));
    CHECK(extend_block(SupportWindow(5, 10), 0) == SupportWindow(5, 10));
}

TEST_CASE("chebyshev window holds at least 90 percent of the mass of test laws") {
    SupportConfig cfg;
    for (const auto& law : {oracle::ReferenceLaw::poisson(6.0), oracle::ReferenceLaw::binomial(30, 0.4)}) {
        const SupportWindow big(0, 200);
        const auto mu = oracle::reference_moments(law, big, 2);
        const auto w = chebyshev_window(mu, cfg);
        const auto dist = oracle::truncated(law, big);
        double inside = 0.0;
        for (std::int64_t x = w.left; x <= std::min(w.right, big.right); ++x) {
            inside += dist.prob_at(x);
        }
        CHECK(inside >= 0.9);
    }
}
