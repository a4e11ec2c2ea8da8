#include <doctest.h>

#include <cmath>

#include "crsnoma/quadrature.hpp"

using namespace crsnoma;

TEST_CASE("known integrals") {
    auto poly = [](double x) { return x * x; };
    CHECK(quad::integrate(poly, 0.0, 1.0, 1e-12).value == doctest::Approx(1.0 / 3).epsilon(1e-13));

    auto expo = [](double x) { return std::exp(-x); };
    CHECK(quad::integrate(expo, 0.0, 60.0, 1e-12).value == doctest::Approx(1.0).epsilon(1e-12));

    // peaked integrand spanning many scales: int_0^1 1/sqrt(x) = 2
    auto peaked = [](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; };
    CHECK(quad::integrate(peaked, 1e-30, 1.0, 1e-9, 1e-9, 200000).value ==
          doctest::Approx(2.0).epsilon(1e-6));

    // boundary-layer shape typical of the rate integrals:
    // int_0^L rho/((1+rho x)(1+x)) dx = rho/(rho-1) * ln((1+rho L)/(1+L))
    const double rho = 1e4, L = 1e6;
    auto layer = [&](double x) { return rho / ((1.0 + rho * x) * (1.0 + x)); };
    const double got = quad::integrate(layer, 0.0, L, 1e-10).value;
    const double want = rho / (rho - 1.0) * std::log((1.0 + rho * L) / (1.0 + L));
    CHECK(std::fabs(got - want) < 1e-9);
}

TEST_CASE("tolerance failure reported") {
    auto noisy = [](double x) { return std::sin(1.0 / (x + 1e-12)); };
    CHECK_THROWS_AS(quad::integrate(noisy, 0.0, 1.0, 1e-14, 0.0, 64), ToleranceError);
}

TEST_CASE("error estimate is honest") {
    auto f = [](double x) { return std::log1p(x) * std::exp(-3.0 * x); };
    const auto r = quad::integrate(f, 0.0, 40.0, 1e-11);
    // reference via a much tighter run
    const auto tight = quad::integrate(f, 0.0, 40.0, 1e-14);
    CHECK(std::fabs(r.value - tight.value) <= 1e-10);
}
