#include <doctest.h>

#include <cmath>
#include <numbers>

#include "idv/solve.hpp"
#include "idv/specfun.hpp"

using namespace idv;

namespace {

constexpr double kPi = std::numbers::pi;
const double kR3 = std::sqrt(3.0);

double f12479(double x) { return 2 * std::cos(kR3 * x) + std::exp(-3 * x); }
double s12479(long n) { return (kPi / 2 + kPi * double(n)) / kR3; }

}  // namespace

TEST_CASE("bracketed roots") {
    CHECK(std::fabs(root_bracketed(f12479, {0.8, 1.0}, 1e-15) - 0.924906399595071738) <= 1e-14);
    CHECK(std::fabs(root_bracketed([](double x) { return x * x - 2; }, {1, 2}, 1e-15) - std::sqrt(2.0)) <= 1e-15);
    auto g = [](double t) { return t + t * t + t * t * t + 1 / t + 1 / (t * t) + 1 / (t * t * t) - 70; };
    CHECK(std::fabs(root_bracketed(g, {0.2, 0.3}, 1e-15) - (2 - kR3)) <= 1e-14);
    CHECK_THROWS(root_bracketed([](double x) { return x * x + 1; }, {-1, 1}, 1e-12));
}

TEST_CASE("bracket validation") {
    const Bracket b = make_bracket([](double x) { return x - 10; }, 0, 20);
    CHECK(b.a == 0);
    CHECK(b.b == 20);
    CHECK_THROWS_AS(make_bracket([](double x) { return x - 10; }, 0, 1), PreconditionError);
    CHECK_THROWS_AS(make_bracket([](double x) { return x; }, 1, -1), PreconditionError);
}

TEST_CASE("enumerating roots") {
    auto br = [](long n) { return Bracket{s12479(n) - 0.125, s12479(n) + 0.125}; };
    const auto r = enumerate_roots(f12479, br, 4);
    REQUIRE(r.size() == 4);
    // independent high-precision values
    CHECK(std::fabs(r[0] - 0.924906399595071738) <= 1e-14);
    CHECK(std::fabs(r[1] - 2.720616677511831678) <= 1e-14);
    CHECK(std::fabs(r[2] - 4.534498767435788829) <= 1e-14);
    CHECK(std::fabs(r[3] - 6.348297773273378647) <= 1e-14);

    const auto sr = enumerate_roots([](double x) { return std::sin(x); },
                                    [](long n) { return Bracket{(n + 1) * kPi - 0.5, (n + 1) * kPi + 0.5}; }, 3);
    REQUIRE(sr.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(sr[i] - (i + 1) * kPi) <= 1e-14);

    CHECK(enumerate_roots(f12479, br, 0).empty());
}

TEST_CASE("root power sums") {
    const double delta = 1 / (16 * kR3);
    TailModel tail{s12479, [delta](long) { return delta; }};
    auto br = [](long n) { return Bracket{s12479(n) - 0.125, s12479(n) + 0.125}; };
    const auto roots = enumerate_roots(f12479, br, 40);
    const NumericResult r = root_power_sum(roots, 6, tail, 40);
    CHECK(std::fabs(r.value - 1.6) <= 1e-8);
    CHECK(r.err <= 1e-8);

    // the asymptotes alone: 27 * 63 zeta(6) / pi^6 = 9/5
    const NumericResult t = root_power_sum({}, 6, TailModel{s12479, [](long) { return 0.0; }}, 0);
    CHECK(std::fabs(t.value - 1.8) <= 1e-12);

    CHECK_THROWS_AS(root_power_sum({2.0}, 1, tail, 1), PreconditionError);
}

TEST_CASE("multistart minimisation") {
    // spherical angles on the positive octant of the unit sphere
    auto obj = [](const std::vector<double>& p) {
        const double x = std::sin(p[0]) * std::cos(p[1]), y = std::sin(p[0]) * std::sin(p[1]), z = std::cos(p[0]);
        return 1 / x + 1 / y + 2 / z;
    };
    MinimizeOptions o;
    o.starts = 32;
    const auto m = minimize_multistart(obj, Box{{0.01, 0.01}, {kPi / 2 - 0.01, kPi / 2 - 0.01}}, o);
    CHECK(std::fabs(m.value - std::pow(2 + std::cbrt(4.0), 1.5)) <= 1e-9);

    // substitute a = e^u, b = e^v, c = 1/(ab); the infimum 3 is attained at a = b = c = 1
    auto H = [](const std::vector<double>& v) {
        const double a = std::exp(v[0]), b = std::exp(v[1]), c = 1 / (a * b);
        auto t = [](double p, double q, double r) { return (std::pow(p, 7) + p * p * p + q * r) / (p + q * r + 1); };
        return t(a, b, c) + t(b, c, a) + t(c, a, b);
    };
    const auto h = minimize_multistart(H, Box{{-1.5, -1.5}, {1.5, 1.5}}, o);
    CHECK(std::fabs(h.value - 3) <= 1e-9);
    CHECK(std::fabs(h.point[0]) <= 1e-4);
    CHECK(std::fabs(h.point[1]) <= 1e-4);

    const auto q = minimize_multistart([](const std::vector<double>& p) { return (p[0] - 1) * (p[0] - 1); }, Box{{0}, {2}});
    CHECK(std::fabs(q.value) <= 1e-12);
    CHECK(std::fabs(q.point[0] - 1) <= 1e-6);
}

TEST_CASE("halton points are reproducible") {
    const auto a = scrambled_halton(16, 3, 7), b = scrambled_halton(16, 3, 7), c = scrambled_halton(16, 3, 8);
    CHECK(a == b);
    CHECK(a != c);
    for (const auto& p : a)
        for (double v : p) CHECK((v >= 0 && v < 1));
}
