#include <doctest.h>

#include <cmath>
#include <numbers>

#include "idv/exact.hpp"
#include "idv/seqsum.hpp"
#include "idv/specfun.hpp"

using namespace idv;

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace

TEST_CASE("geometric tails") {
    auto r = sum_series([](long n) { return std::ldexp(1.0, -static_cast<int>(n)); }, 1, TailStrategy::geometric(0.5, 200),
                        1e-15);
    CHECK(near(r.value, 1.0, 1e-15));
    r = sum_series([](long n) { return 1.0 / std::sinh(std::ldexp(1.0, static_cast<int>(n))); }, 0,
                   TailStrategy::geometric(0.5, 64), 1e-13);
    CHECK(near(r.value, 2 / (std::numbers::e - 1), 1e-12));
}

TEST_CASE("integral tails on slowly decaying terms") {
    // sum 1/n^2 with the exact model tail
    auto r = sum_series([](long n) { return 1.0 / (double(n) * double(n)); }, 1,
                        TailStrategy::integral(2000, [](double x) { return 1 / (x * x); }), 1e-12);
    CHECK(near(r.value, kPi * kPi / 6, 1e-11));
    CHECK(r.err <= 1e-10);

    // H_k/(k(k+1)(k+2)) tail modelled by (log x + gamma)/x^3
    const double g = 0.57721566490153286;
    r = sum_series([](long k) { return harmonic_real(k) / (double(k) * (k + 1.0) * (k + 2.0)); }, 1,
                   TailStrategy::integral(4000, [g](double x) { return (std::log(x) + g + 0.5 / x) / (x * (x + 1) * (x + 2)); }),
                   1e-12);
    CHECK(near(r.value, kPi * kPi / 12 - 0.5, 1e-10));
}

TEST_CASE("asymptotic tails") {
    // sum (2n-1) trigamma(n) - 2, terms ~ 1/(6 n^2)
    auto r = sum_series([](long n) { return (2.0 * n - 1) * trigamma(double(n)) - 2; }, 1,
                        TailStrategy::asymptotic_fit(2.0, 20000), 1e-10);
    CHECK(near(r.value, -0.5, 1e-9));
    r = sum_series([](long n) { return 1.0 / std::pow(double(n), 3); }, 1, TailStrategy::asymptotic(1.0, 3.0, 100000),
                   1e-12);
    CHECK(near(r.value, zeta(3), 1e-11));
}

TEST_CASE("alternating acceleration reaches 1e-13 within 40 terms") {
    auto r = sum_alternating([](long n) { return 1.0 / (n + 1.0); }, 0, 1e-13, 40);
    CHECK(near(r.value, std::log(2.0), 1e-13));
    r = sum_alternating([](long n) { return 1.0 / (2.0 * n + 1); }, 0, 1e-13, 40);
    CHECK(near(r.value, kPi / 4, 1e-13));
    r = sum_alternating([](long n) { return 1.0 / ((2.0 * n + 1) * (2.0 * n + 1)); }, 0, 1e-13, 40);
    CHECK(near(r.value, (trigamma(0.25) - trigamma(0.75)) / 16, 1e-13));
}

TEST_CASE("alternating sum of Gregory coefficients") {
    std::vector<double> g(41);
    for (int k = 1; k <= 40; ++k) g[k] = to_double(gregory_coefficient(k));
    auto r = sum_alternating([&](long j) { return g[j + 1]; }, 0, 1e-12, 40);
    // a_0 = -1 and the remaining signs alternate starting with -a_1
    CHECK(near(-1 - r.value, -1 / std::log(2.0), 1e-9));
}

TEST_CASE("cvz on an explicit vector of magnitudes") {
    std::vector<double> a(40);
    for (int k = 0; k < 40; ++k) a[k] = 1.0 / (k + 1.0);
    CHECK(near(cvz(a).value, std::log(2.0), 1e-13));
}

TEST_CASE("double series") {
    auto tail_for = [](int r) {
        DoubleTail t;
        t.row = [r](long m) {
            const double md = double(m);
            return TailStrategy::integral(2000, [md, r](double x) { return 1.0 / (md * x * (md + x + r)); });
        };
        t.outer = TailStrategy::integral(2000, [r](double x) {
            const double y = x + r;
            return (std::log(y) + 0.57721566490153286 + 0.5 / y) / (x * y);
        });
        return t;
    };
    auto term = [](int r) {
        return [r](long m, long n) { return 1.0 / (double(m) * double(n) * double(m + n + r)); };
    };
    CHECK(near(sum_double(term(0), tail_for(0), 1e-10).value, 2 * zeta(3), 1e-8));
    CHECK(near(sum_double(term(1), tail_for(1), 1e-10).value, 2.0, 1e-8));

    DoubleTail zt;
    zt.row = [](long) { return TailStrategy::truncate(10); };
    zt.outer = TailStrategy::truncate(10);
    CHECK(sum_double([](long, long) { return 0.0; }, zt, 1e-12).value == 0.0);
}

TEST_CASE("infinite products") {
    auto r = product_infinite([](long n) { return (std::pow(n, 4.0) + 4) / (std::pow(n, 4.0) - 1); }, 2,
                              TailStrategy::asymptotic(5.0, 4.0, 20000), 1e-12);
    CHECK(near(r.value, 2 * std::sinh(kPi) / (5 * kPi), 1e-10));

    r = product_infinite([](long n) { return 4.0 * n * (n + 1.0) / ((2.0 * n + 1) * (2.0 * n + 1)); }, 1,
                         TailStrategy::integral(2000, [](double x) { return std::log1p(-1 / ((2 * x + 1) * (2 * x + 1))); }),
                         1e-12);
    CHECK(near(r.value, kPi / 4, 1e-10));

    const double c = 2 / kPi, c4 = c * c * c * c;
    r = product_infinite([c4](long n) { return 1 - c4 / std::pow(2.0 * n + 1, 4); }, 0,
                         TailStrategy::asymptotic(-c4 / 16, 4.0, 20000), 1e-12);
    CHECK(near(r.value, std::cos(1.0) * std::cosh(1.0), 1e-10));

    r = product_infinite([](long) { return 3.0; }, 5, TailStrategy::truncate(4), 1e-12);
    CHECK(r.value == 1.0);
    CHECK(r.err == 0.0);

    CHECK_THROWS_AS(product_infinite([](long) { return -1.0; }, 1, TailStrategy::truncate(3), 1e-12), DomainError);
}

TEST_CASE("limit extrapolation") {
    LimitOptions o;
    o.n0 = 8;
    o.K = 6;
    auto r = limit_extrapolate(
        [&](int k) {
            const double n = o.n0 * std::ldexp(1.0, k);
            return std::pow(1 + 1 / n, n);
        },
        o);
    CHECK(near(r.value, std::numbers::e, 1e-10));

    o = LimitOptions{};
    o.n0 = 8;
    o.K = 6;
    r = limit_extrapolate([](int k) { return k >= 0 ? 7.0 : 0.0; }, o);
    CHECK(r.value == 7.0);
    CHECK(r.err == 0.0);

    // sum_{k=1}^n arsinh(1/sqrt(n^2+k^2)) -> log(1+sqrt2)
    o = LimitOptions{};
    o.n0 = 16;
    o.K = 7;
    r = limit_extrapolate(
        [&](int k) {
            const long n = 16L << k;
            double s = 0;
            for (long j = 1; j <= n; ++j) s += std::asinh(1 / std::sqrt(double(n) * n + double(j) * j));
            return s;
        },
        o);
    CHECK(near(r.value, std::log(1 + std::sqrt(2.0)), 1e-9));

    o = LimitOptions{};
    o.K = 8;
    o.method = LimitMethod::WynnEpsilon;
    std::vector<double> partial(9);
    double s = 0;
    for (int k = 0; k <= 8; ++k) {
        s += std::pow(-0.9, k);
        partial[k] = s;
    }
    CHECK(near(limit_from_samples(partial, o).value, 1 / 1.9, 1e-10));

    o.K = 1;
    CHECK_THROWS_AS(limit_extrapolate([](int) { return 1.0; }, o), PreconditionError);
}
