#include "glfrac/phi_analysis.hpp"

#include "glfrac/gl_engine.hpp"
#include "glfrac/signals.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace glfrac;

namespace {

// Independent extremum-value oracle through the gamma function:
// Phi_n(-mu) = exp(mu*ln h + lgamma(n+mu) - lgamma(mu) - lgamma(n+1)).
double phi_by_lgamma(std::size_t n, double mu, double h) {
    const double nd = static_cast<double>(n);
    return std::exp(mu * std::log(h) + std::lgamma(nd + mu) - std::lgamma(mu) -
                    std::lgamma(nd + 1.0));
}

} // namespace

TEST_CASE("context constants") {
    const PhiContext ctx(0.001);
    CHECK(ctx.gamma == doctest::Approx(std::log(1000.0)).epsilon(1e-15));
    CHECK(ctx.eta == doctest::Approx(std::exp(-1.0) / ctx.gamma).epsilon(1e-15));
    CHECK_THROWS_AS(PhiContext(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PhiContext(1.0), std::invalid_argument);
    CHECK_THROWS_AS(PhiContext(1.5), std::invalid_argument);
}

TEST_CASE("psi pinned values and domain") {
    CHECK(psi(1, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(psi(2, 2.0) == doctest::Approx(1.0 / 2.0 + 1.0 / 3.0).epsilon(1e-15));
    CHECK(psi(3, 1.0) == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(psi(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(psi(2, -1.0), std::domain_error);
}

TEST_CASE("psi is strictly decreasing") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = 1 + static_cast<std::size_t>(rng.next() % 100);
        double mu1 = 20.0 * rng.next_unit() + 1e-6;
        double mu2 = 20.0 * rng.next_unit() + 1e-6;
        if (mu1 == mu2)
            continue;
        if (mu1 > mu2)
            std::swap(mu1, mu2);
        CHECK(psi(n, mu1) > psi(n, mu2));
    }
}

TEST_CASE("degree-1 extremum: mu = 1/gamma, value eta") {
    const PhiContext ctx(0.001);
    const PhiExtremum ext = find_mu_max(1, ctx);
    CHECK(std::abs(ext.mu_max - 1.0 / ctx.gamma) < 1e-10);
    CHECK(ext.phi_at_max == doctest::Approx(eta(ctx)).epsilon(1e-10));
    CHECK(std::abs(ext.phi_at_max - 0.0532) < 0.0002);
    // for n = 1 the AM-GM expression collapses onto the value itself
    CHECK(ext.am_gm_bound == doctest::Approx(ext.phi_at_max).epsilon(1e-12));
}

TEST_CASE("degree-2 extremum against the hand-solved quadratic") {
    const PhiContext ctx(0.001);
    const double g = ctx.gamma;
    // positive root of g*mu^2 + (g-2)*mu - 1 = 0
    const double root = (-(g - 2.0) + std::sqrt((g - 2.0) * (g - 2.0) + 4.0 * g)) / (2.0 * g);
    const PhiExtremum ext = find_mu_max(2, ctx);
    CHECK(std::abs(ext.mu_max - root) < 1e-10);
    CHECK(std::abs(ext.mu_max - 0.165297) < 1e-5);
    CHECK(ext.mu_max > 1.0 / g);
}

TEST_CASE("large-degree extrema") {
    const PhiContext ctx(0.001);

    // frozen two-route values for degree 1000
    const PhiExtremum e1000 = find_mu_max(1000, ctx);
    CHECK(e1000.mu_max == doctest::Approx(1.4626269481).epsilon(1e-6));
    CHECK(e1000.phi_at_max == doctest::Approx(1.129555315e-3).epsilon(1e-6));
    CHECK(e1000.phi_at_max == doctest::Approx(phi_by_lgamma(1000, e1000.mu_max, 0.001)).epsilon(1e-9));

    // degree 10000 carries the reported 2.80 peak near alpha = -10.5
    const PhiExtremum e10000 = find_mu_max(10000, ctx);
    CHECK(std::abs(e10000.phi_at_max - 2.80) < 0.05);
    CHECK(std::abs(e10000.mu_max - 10.5) < 0.5);

    for (std::size_t n : {10u, 100u, 1000u}) {
        const PhiExtremum e = find_mu_max(n, ctx);
        CHECK(e.phi_at_max == doctest::Approx(phi_by_lgamma(n, e.mu_max, 0.001)).epsilon(1e-9));
    }
}

TEST_CASE("every computed extremum solves psi = gamma") {
    const PhiContext ctx(0.001);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 50u, 100u, 500u, 1000u, 5000u, 10000u}) {
        const PhiExtremum ext = find_mu_max(n, ctx);
        CHECK(std::abs(psi(n, ext.mu_max) - ctx.gamma) <= 1e-8);
    }
}

TEST_CASE("extremum location grows past 1/gamma for n >= 2") {
    const PhiContext ctx(0.001);
    const double base = 1.0 / ctx.gamma;
    CHECK(std::abs(find_mu_max(1, ctx).mu_max - base) < 1e-10);
    for (std::size_t n = 2; n <= 1000; ++n)
        CHECK(find_mu_max(n, ctx).mu_max > base);
}

TEST_CASE("AM-GM bound dominates the extremum value") {
    const PhiContext ctx(0.001);
    for (std::size_t n = 1; n <= 1000; ++n) {
        const PhiExtremum ext = find_mu_max(n, ctx);
        CHECK(ext.phi_at_max > 0.0);
        CHECK(ext.phi_at_max <= ext.am_gm_bound);
        if (n >= 2)
            CHECK(ext.phi_at_max < ext.am_gm_bound);
    }
}

TEST_CASE("phi rises before the extremum and falls after it") {
    const PhiContext ctx(0.001);
    for (std::size_t n : {1u, 2u, 3u, 7u, 20u, 50u, 100u}) {
        const double mu_max = find_mu_max(n, ctx).mu_max;
        double prev = 0.0; // phi at mu -> 0+ vanishes
        for (int i = 1; i <= 8; ++i) {
            const double mu = mu_max * static_cast<double>(i) / 8.0;
            const double value = phi(n, -mu, ctx.h);
            CHECK(value > prev);
            prev = value;
        }
        for (int i = 1; i <= 8; ++i) {
            const double mu = mu_max * (1.0 + static_cast<double>(i));
            const double value = phi(n, -mu, ctx.h);
            CHECK(value < prev);
            prev = value;
        }
    }
}

TEST_CASE("phi vanishes at order zero and far into the integrations") {
    const PhiContext ctx(0.001);
    for (std::size_t n : {1u, 5u, 40u, 100u}) {
        CHECK(phi(n, 0.0, ctx.h) == 0.0);
        const PhiExtremum ext = find_mu_max(n, ctx);
        CHECK(phi(n, -50.0, ctx.h) < ext.phi_at_max * 1e-6);
    }
}

TEST_CASE("crossover: phi_n(-1) = h for every degree") {
    CHECK(crossover_check(1, PhiContext(0.001)) == 0.0);
    CHECK(crossover_check(10000, PhiContext(0.001)) < 1e-9);
    CHECK(crossover_check(5, PhiContext(0.5)) < 1e-12);
}

TEST_CASE("monotonicity in the degree switches sign at alpha = -1") {
    const PhiContext ctx(0.001);
    SUBCASE("decreasing on -1 < alpha < 0") {
        const WeightTable table(-0.5, 5001, ctx.h);
        for (std::size_t n = 1; n <= 5000; ++n)
            CHECK(table.phi(n + 1) < table.phi(n));
    }
    SUBCASE("increasing below alpha = -1") {
        for (double alpha : {-2.0, -4.0}) {
            const WeightTable table(alpha, 5001, ctx.h);
            for (std::size_t n = 1; n <= 5000; ++n)
                CHECK(table.phi(n + 1) > table.phi(n));
        }
    }
}

TEST_CASE("eta bounds phi on the interval (-1, 0)") {
    const PhiContext ctx(0.001);
    const double bound = eta(ctx) * (1.0 + 1e-12);
    for (int i = 1; i <= 19; ++i) {
        const double alpha = -static_cast<double>(i) * 0.05;
        double w = std::pow(ctx.h, -alpha);
        bool ok = true;
        for (std::size_t j = 0; j < 10000; ++j) {
            w *= (static_cast<double>(j) - alpha) / (static_cast<double>(j) + 1.0);
            ok = ok && w <= bound;
        }
        CHECK(ok);
    }
}

TEST_CASE("relative change between consecutive degrees follows |alpha+1|/(n+1)") {
    const PhiContext ctx(0.001);
    for (double alpha : {-0.5, -2.0, -4.0, 0.7}) {
        double prev_change = std::numeric_limits<double>::infinity();
        for (std::size_t n : {1u, 2u, 5u, 10u, 100u, 999u}) {
            const double pn = phi(n, alpha, ctx.h);
            const double pn1 = phi(n + 1, alpha, ctx.h);
            const double expected = std::abs(-alpha - 1.0) / (static_cast<double>(n) + 1.0);
            CHECK(std::abs(pn1 - pn) / std::abs(pn) == doctest::Approx(expected).epsilon(1e-12));
            CHECK(expected < prev_change);
            prev_change = expected;
        }
    }
}

TEST_CASE("eta pinned values") {
    CHECK(std::abs(eta(PhiContext(0.001)) - 0.0532) < 0.0002);
    CHECK(eta(PhiContext(std::exp(-1.0))) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(eta(PhiContext(0.01)) == doctest::Approx(0.079885).epsilon(1e-5));
}

TEST_CASE("phi curve sampling") {
    const PhiContext ctx(0.001);
    SUBCASE("degree 1 values by hand: phi_1(alpha) = h^{-alpha} * (-alpha)") {
        const PhiCurve curve = sample_phi_curve({1}, -2.0, -0.5, 0.5, ctx);
        REQUIRE(curve.alpha_grid.size() == 4);
        CHECK(curve.values[0][0] == doctest::Approx(2e-6).epsilon(1e-12));  // alpha = -2
        CHECK(curve.values[0][2] == doctest::Approx(1e-3).epsilon(1e-12));  // alpha = -1
        CHECK(curve.values[0][3] == doctest::Approx(std::sqrt(0.001) * 0.5).epsilon(1e-12));
    }
    SUBCASE("sign structure for positive orders") {
        // q(alpha) < 0 on (2m, 2m+1) and > 0 on (2m+1, 2m+2):
        // q(0.5) = (-0.5)(0.5)(1.5) < 0, q(1.5) = (-1.5)(-0.5)(0.5) > 0
        const PhiCurve curve = sample_phi_curve({3}, 0.5, 1.5, 1.0, ctx);
        CHECK(curve.values[0][0] < 0.0);
        CHECK(curve.values[0][1] > 0.0);
        const PhiCurve zero = sample_phi_curve({2}, 1.0, 1.0 + 1e-9, 1.0, ctx);
        CHECK(zero.values[0][0] == 0.0);
        const PhiCurve five = sample_phi_curve({5}, 0.5, 3.5, 1.0, ctx);
        CHECK(five.values[0][0] < 0.0);
        CHECK(five.values[0][1] > 0.0);
        CHECK(five.values[0][2] < 0.0);
        CHECK(five.values[0][3] > 0.0);
    }
    SUBCASE("grid is strictly increasing and rows align") {
        const PhiCurve curve = sample_phi_curve({0, 1, 10}, -12.0, 0.0, 0.01, ctx);
        REQUIRE(curve.alpha_grid.size() == 1201);
        REQUIRE(curve.values.size() == 3);
        for (const auto& row : curve.values)
            CHECK(row.size() == curve.alpha_grid.size());
        for (std::size_t j = 1; j < curve.alpha_grid.size(); ++j)
            CHECK(curve.alpha_grid[j] > curve.alpha_grid[j - 1]);

        // degree 0 rises exponentially toward phi_0(0) = 1, degree 1 is
        // single-peaked on the same window
        bool n0_increasing = true;
        for (std::size_t j = 1; j < curve.alpha_grid.size(); ++j)
            n0_increasing = n0_increasing && curve.values[0][j] > curve.values[0][j - 1];
        CHECK(n0_increasing);
        CHECK(curve.values[0].back() == 1.0);
        const auto peak =
            std::max_element(curve.values[1].begin(), curve.values[1].end());
        CHECK(curve.alpha_grid[peak - curve.values[1].begin()] ==
              doctest::Approx(-0.1448).epsilon(0.05));
    }
    SUBCASE("input guards") {
        CHECK_THROWS_AS(sample_phi_curve({}, -1.0, 0.0, 0.1, ctx), std::invalid_argument);
        CHECK_THROWS_AS(sample_phi_curve({1}, 0.0, -1.0, 0.1, ctx), std::invalid_argument);
        CHECK_THROWS_AS(sample_phi_curve({1}, -1.0, 0.0, 0.0, ctx), std::invalid_argument);
        CHECK_THROWS_AS(sample_phi_curve({1}, -100.0, 0.0, 0.1, ctx), std::invalid_argument);
    }
}
