#include <doctest.h>

#include <cmath>
#include <vector>

#include "bubblestat/errors.hpp"
#include "bubblestat/normal.hpp"

using namespace bubblestat;

namespace {

// Oracle: Simpson quadrature of the density over [0, x].
double cdf_by_quadrature(double x) {
    const int steps = 20000;  // even
    const double h = x / steps;
    double sum = normal_pdf(0.0) + normal_pdf(x);
    for (int i = 1; i < steps; ++i) {
        sum += normal_pdf(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return 0.5 + sum * h / 3.0;
}

// Oracle: invert the CDF by bisection, independent of the rational approximation.
double quantile_by_bisection(double p) {
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (normal_cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("normal") {

TEST_CASE("cdf reference values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_cdf(3.0) == doctest::Approx(0.9986501019683699).epsilon(1e-12));
    CHECK(normal_cdf(-1.0) == doctest::Approx(0.15865525393145705).epsilon(1e-12));
}

TEST_CASE("cdf agrees with quadrature oracle") {
    for (double x : {0.25, 0.5, 1.0, 1.96, 2.5, 3.0, 4.0}) {
        CHECK(std::fabs(normal_cdf(x) - cdf_by_quadrature(x)) < 1e-10);
    }
}

TEST_CASE("cdf symmetry and complement") {
    for (double x : {0.1, 0.7, 1.3, 2.9, 5.5}) {
        CHECK(normal_cdf(-x) == doctest::Approx(1.0 - normal_cdf(x)).epsilon(1e-14));
        CHECK(normal_cdf(x) + normal_cdf_complement(x) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // far tail stays meaningful where 1 - cdf would round to zero
    CHECK(normal_cdf_complement(10.0) == doctest::Approx(7.62e-24).epsilon(1e-2));
}

TEST_CASE("quantile matches bisection oracle") {
    const std::vector<double> ps = {1e-8, 1e-4, 0.01, 0.025, 0.2, 0.5,
                                    0.8,  0.975, 0.99, 1 - 1e-4, 1 - 1e-8};
    for (double p : ps) {
        CHECK(std::fabs(normal_quantile(p) - quantile_by_bisection(p)) < 1e-9);
    }
}

TEST_CASE("quantile round-trips the cdf") {
    // |x| <= 5: p is far enough from 1 that the round-trip keeps full precision
    for (double x = -5.0; x <= 5.0; x += 0.25) {
        CHECK(normal_quantile(normal_cdf(x)) == doctest::Approx(x).epsilon(1e-10));
    }
    // deep tail via the lower side, where small p retains relative precision
    for (double x = 5.0; x <= 8.0; x += 0.5) {
        CHECK(normal_quantile(normal_cdf(-x)) == doctest::Approx(-x).epsilon(1e-10));
    }
}

TEST_CASE("quantile known constants") {
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK(normal_quantile(0.995) == doctest::Approx(2.5758293035489004).epsilon(1e-12));
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
}

TEST_CASE("quantile rejects out-of-range p") {
    CHECK_THROWS_AS((void)normal_quantile(0.0), ConfigError);
    CHECK_THROWS_AS((void)normal_quantile(1.0), ConfigError);
    CHECK_THROWS_AS((void)normal_quantile(-0.3), ConfigError);
    CHECK_THROWS_AS((void)normal_quantile(1.7), ConfigError);
}

}  // TEST_SUITE
