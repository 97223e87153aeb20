#include <doctest.h>

#include <cmath>
#include <numbers>

#include "idv/specfun.hpp"

using namespace idv;

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// direct sum to N plus the integral/Euler-Maclaurin remainder N^{1-s}/(s-1) - N^{-s}/2 + s N^{-s-1}/12
double zeta_oracle(double s) {
    const long N = 1000000;
    long double acc = 0;
    for (long n = N; n >= 1; --n) acc += std::pow(static_cast<long double>(n), -s);
    const long double x = N;
    acc += std::pow(x, 1 - s) / (s - 1) - std::pow(x, -s) / 2 + s * std::pow(x, -s - 1) / 12;
    return static_cast<double>(acc);
}

}  // namespace

TEST_CASE("zeta") {
    CHECK(near(zeta(6), std::pow(kPi, 6) / 945, 1e-14));
    CHECK(near(zeta(2), zeta_oracle(2), 1e-14));
    CHECK(near(zeta(3), zeta_oracle(3), 1e-14));
    CHECK(near(zeta(2), 1.6449340668482264, 1e-15));
    CHECK_THROWS_AS(zeta(1.0), DomainError);
}

TEST_CASE("eta and its relation to zeta") {
    CHECK(near(eta(3), 0.75 * zeta(3), 1e-11));
    CHECK(near(eta(2), kPi * kPi / 12, 1e-11));
    CHECK(near(eta(1), std::log(2.0), 1e-15));
    for (double s : {1.5, 2.0, 2.5, 3.0, 4.0, 7.0})
        CHECK(near(eta(s), (1 - std::pow(2.0, 1 - s)) * zeta(s), 1e-11));
    CHECK_THROWS_AS(eta(0.5), DomainError);
}

TEST_CASE("dilogarithm values, reflection and inversion") {
    const double l2 = std::log(2.0);
    CHECK(near(dilog(1), kPi * kPi / 6, 1e-14));
    CHECK(near(dilog(0.5), kPi * kPi / 12 - l2 * l2 / 2, 1e-15));
    CHECK(dilog(0) == 0.0);
    for (double x : {0.05, 0.2, 0.37, 0.5, 0.81, 0.99}) {
        CAPTURE(x);
        CHECK(near(dilog(x) + dilog(1 - x), kPi * kPi / 6 - std::log(x) * std::log(1 - x), 1e-11));
    }
    // Li2(x) + Li2(1/x) = -pi^2/6 - log^2(-x)/2 for x < 0
    for (double x : {-0.1, -0.5, -1.0, -3.0, -40.0}) {
        CAPTURE(x);
        const double l = std::log(-x);
        CHECK(near(dilog(x) + dilog(1 / x), -kPi * kPi / 6 - l * l / 2, 1e-11));
    }
    CHECK_THROWS_AS(dilog(1.5), DomainError);
}

TEST_CASE("trigamma") {
    CHECK(near(trigamma(1), kPi * kPi / 6, 1e-14));
    CHECK(near(trigamma(2), kPi * kPi / 6 - 1, 1e-14));
    for (double x : {0.1, 0.5, 1.3, 3.7, 12.0, 250.0}) {
        CAPTURE(x);
        CHECK(near(trigamma(x) - trigamma(x + 1), 1 / (x * x), 1e-11));
    }
    // Catalan constant from the quarter-point difference
    CHECK(near((trigamma(0.25) - trigamma(0.75)) / 16, 0.915965594177219015, 1e-14));
    CHECK_THROWS_AS(trigamma(0), DomainError);
}

TEST_CASE("harmonic numbers are exact") {
    CHECK(harmonic(0, 1) == 0);
    CHECK(harmonic(1, 1) == 1);
    CHECK(harmonic(4, 1) == Rational(25, 12));
    CHECK(harmonic(2, 2) == Rational(5, 4));
    CHECK(near(harmonic_real(1000), to_double(harmonic(1000, 1)), 1e-13));
    CHECK_THROWS_AS(harmonic(3, 3), PreconditionError);
}

TEST_CASE("chebyshev") {
    CHECK(chebyshev(ChebKind::U, 1, 3.0) == 6.0);
    CHECK(chebyshev(ChebKind::U, 5, 1.0) == doctest::Approx(6.0));
    CHECK(near(chebyshev(ChebKind::T, 3, std::cos(0.4)), std::cos(1.2), 1e-15));
    CHECK(near(chebyshev(ChebKind::U, 4, std::cos(0.3)), std::sin(1.5) / std::sin(0.3), 1e-14));
}

TEST_CASE("gamma and beta") {
    CHECK(near(beta(2, 2), 1.0 / 6, 1e-15));
    CHECK(near(beta(1, 1), 1.0, 1e-15));
    CHECK(near(log_gamma(0.5), 0.5 * std::log(kPi), 1e-15));
    CHECK(near(log_gamma(10), std::log(362880.0), 1e-13));
    CHECK_THROWS_AS(beta(-1, 2), DomainError);
}

TEST_CASE("bernoulli table") {
    CHECK(bernoulli_even(0) == 1.0);
    CHECK(near(bernoulli_even(1), 1.0 / 6, 1e-16));
    CHECK(near(bernoulli_even(2), -1.0 / 30, 1e-16));
    CHECK(near(bernoulli_even(6), 691.0 / 2730 * -1, 1e-15));
    CHECK_THROWS_AS(bernoulli_even(kBernoulliCount), PreconditionError);
}
