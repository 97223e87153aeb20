#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "idv/quad.hpp"
#include "idv/specfun.hpp"

using namespace idv;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("polynomials integrate to machine precision") {
    // random-ish integer coefficients, exact antiderivative by hand
    const double c[] = {3, -2, 5, 1, -7, 4, 0, 2, -1, 6, -3};
    auto p = [&](double x) {
        double s = 0;
        for (int k = 10; k >= 0; --k) s = s * x + c[k];
        return s;
    };
    auto P = [&](double x) {
        double s = 0;
        for (int k = 10; k >= 0; --k) s += c[k] * std::pow(x, k + 1) / (k + 1);
        return s;
    };
    for (auto [a, b] : {std::pair{0.0, 1.0}, {-1.0, 1.0}, {0.25, 0.75}, {-0.5, 0.3}}) {
        CAPTURE(a);
        CAPTURE(b);
        const NumericResult r = integrate(p, Interval::finite(a, b), {1e-15, 12});
        CHECK(std::fabs(r.value - (P(b) - P(a))) <= 1e-13);
    }
    for (int k = 0; k <= 12; ++k) {
        const NumericResult r = integrate([k](double x) { return std::pow(x, k); }, Interval::finite(0, 1), {1e-15, 12});
        CHECK(std::fabs(r.value - 1.0 / (k + 1)) <= 1e-13);
    }
}

TEST_CASE("endpoint singularities") {
    const NumericResult lg = integrate([](double x) { return std::log(x); }, Interval::finite(0, 1).singular(true, false));
    CHECK(std::fabs(lg.value + 1) <= 1e-11);
    const NumericResult rs =
        integrate([](double x) { return 1 / std::sqrt(x); }, Interval::finite(0, 1).singular(true, false));
    CHECK(std::fabs(rs.value - 2) <= 1e-11);
}

TEST_CASE("closed-form integrals") {
    const double z3 = zeta(3);
    auto r = integrate([](double x) { return (1 - x) * std::log(x) * std::log(x) / (1 + x * x * x); },
                       Interval::finite(0, 1).singular(true, false), {1e-13, 12});
    CHECK(std::fabs(r.value - 13.0 / 9 * z3) <= 1e-10);

    r = integrate([](double t) { return std::cos(std::cos(t)) * std::cosh(std::sin(t)); }, Interval::finite(0, 2 * kPi),
                  {1e-13, 12});
    CHECK(std::fabs(r.value - 2 * kPi) <= 1e-11);

    r = integrate([](double x) { return x * x / ((1 + x * x) * (1 + std::pow(x, 6))); }, Interval::semi_infinite(0),
                  {1e-13, 12});
    CHECK(std::fabs(r.value - kPi / 12) <= 1e-11);

    r = integrate([](double x) { return std::log(std::fabs(x * x * x - std::pow(1 - x, 3))) / x; },
                  Interval::finite(0, 1, {0.5}).singular(true, false), {1e-13, 12});
    CHECK(std::fabs(r.value + 11 * kPi * kPi / 36) <= 1e-10);

    r = integrate([](double) { return 0.0; }, Interval::finite(0, 1));
    CHECK(r.value == 0.0);
    CHECK(r.err == 0.0);
}

TEST_CASE("complex integrands") {
    auto [re, im] = integrate_complex([](double t) { return std::complex<double>(std::exp(-t * t), 0); },
                                      Interval::real_line(), {1e-13, 12});
    CHECK(std::fabs(re.value - std::sqrt(kPi)) <= 1e-12);
    CHECK(std::fabs(im.value) <= 1e-15);

    auto [zr, zi] = integrate_complex([](double) { return std::complex<double>(0, 0); }, Interval::real_line());
    CHECK(zr.value == 0.0);
    CHECK(zi.value == 0.0);

    // (i/2) * integral of tanh(pi t)/(1/2 + i t)^3 over the line is zeta(3)
    auto [tr, ti] = integrate_complex(
        [](double t) { return std::tanh(kPi * t) / std::pow(std::complex<double>(0.5, t), 3); }, Interval::real_line(),
        {1e-12, 12});
    const std::complex<double> v = std::complex<double>(0, 0.5) * std::complex<double>(tr.value, ti.value);
    CHECK(std::fabs(v.real() - zeta(3)) <= 1e-6);
}

TEST_CASE("interval preconditions") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, Interval::finite(1, 0)), PreconditionError);
    CHECK_THROWS_AS(integrate(f, Interval::finite(0, 1, {2.0})), PreconditionError);
    CHECK_THROWS_AS(integrate(f, Interval::finite(0, 1, {0.6, 0.4})), PreconditionError);
    CHECK_THROWS_AS(integrate([](double x) { return 1 / (x - 0.5) / 0.0; }, Interval::finite(0, 1)), EvaluationError);
}
