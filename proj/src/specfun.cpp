#include "idv/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "idv/kahan.hpp"

namespace idv {

namespace {

// B_{2k}, k = 0..15
constexpr std::array<double, kBernoulliCount> kB2k = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

constexpr double kPi2over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Li2 on [-1, 1/2] through u = -log(1-x):  Li2 = sum_n B_n u^{n+1}/(n+1)!
double dilog_core(double x) {
    if (x == 0.0) return 0.0;
    const double u = -std::log1p(-x);
    const double u2 = u * u;
    KahanSum s;
    s += u;
    s += -0.25 * u2;
    double pw = u;        // u^{2k+1}/(2k+1)!
    for (int k = 1; k < kBernoulliCount; ++k) {
        pw *= u2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double term = kB2k[k] * pw;
        s += term;
        if (std::fabs(term) < 1e-18 * std::fabs(s.value())) break;
    }
    return s.value();
}

// Asymptotic part of trigamma beyond the first two terms, valid for x >= 8.
double trigamma_asym_tail(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double pw = inv2 * inv;  // x^{-3}
    double s = 0.0;
    // B_2/x^3 + B_4/x^5 + ... + B_14/x^15; summed small-to-large
    std::array<double, 7> terms{};
    for (int k = 1; k <= 7; ++k) {
        terms[k - 1] = kB2k[k] * pw;
        pw *= inv2;
    }
    for (int k = 6; k >= 0; --k) s += terms[k];
    return s;
}

}  // namespace

double bernoulli_even(int k) {
    if (k < 0 || k >= kBernoulliCount) throw PreconditionError("bernoulli index out of table");
    return kB2k[k];
}

double zeta(double s) {
    if (!(s > 1.0)) throw DomainError("zeta requires s > 1");
    constexpr int N = 20;
    KahanSum sum;
    for (int n = N - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    const double Ns = std::pow(static_cast<double>(N), -s);
    sum += N * Ns / (s - 1.0);
    sum += 0.5 * Ns;
    // Bernoulli corrections B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}, k = 1..6
    double rising = s;       // s(s+1)...(s+2k-2)
    double fact = 2.0;       // (2k)!
    double npow = Ns / N;    // N^{-s-1}
    for (int k = 1; k <= 6; ++k) {
        sum += kB2k[k] / fact * rising * npow;
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        fact *= (2.0 * k + 1) * (2.0 * k + 2);
        npow /= static_cast<double>(N) * N;
    }
    return sum.value();
}

double eta(double s) {
    if (s < 1.0) throw DomainError("eta requires s >= 1");
    if (s == 1.0) return std::numbers::ln2;
    return -std::expm1((1.0 - s) * std::numbers::ln2) * zeta(s);
}

double dilog(double x) {
    if (!(x <= 1.0)) throw DomainError("dilog requires x <= 1");
    if (x == 1.0) return kPi2over6;
    if (x < -1.0) {
        const double l = std::log(-x);
        return -kPi2over6 - 0.5 * l * l - dilog_core(1.0 / x);
    }
    if (x > 0.5) return kPi2over6 - std::log(x) * std::log1p(-x) - dilog_core(1.0 - x);
    return dilog_core(x);
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma requires x > 0");
    KahanSum acc;
    while (x < 8.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    acc += trigamma_asym_tail(x);
    acc += 0.5 * inv * inv;
    acc += inv;
    return acc.value();
}

double trigamma_tail(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma requires x > 0");
    if (x >= 8.0) return trigamma_asym_tail(x);
    return trigamma(x) - 1.0 / x - 0.5 / (x * x);
}

Rational harmonic(long n, int order) {
    if (order != 1 && order != 2) throw PreconditionError("harmonic order must be 1 or 2");
    Rational h = 0;
    for (long j = 1; j <= n; ++j) {
        BigInt d = j;
        if (order == 2) d *= j;
        h += Rational(1, d);
    }
    return h;
}

double harmonic_real(long n) {
    if (n < 0) throw PreconditionError("harmonic_real requires n >= 0");
    if (n <= 32) {
        KahanSum s;
        for (long j = n; j >= 1; --j) s += 1.0 / static_cast<double>(j);
        return s.value();
    }
    const double x = static_cast<double>(n);
    const double i2 = 1.0 / (x * x);
    const double corr = i2 * (-1.0 / 12 + i2 * (1.0 / 120 + i2 * (-1.0 / 252 + i2 * (1.0 / 240))));
    KahanSum s(std::log(x));
    s += 0.57721566490153286;
    s += 0.5 / x;
    s += corr;
    return s.value();
}

double chebyshev(ChebKind kind, int n, double x) {
    if (n < 0) throw PreconditionError("chebyshev degree must be >= 0");
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = kind == ChebKind::T ? x : 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double p2 = 2.0 * x * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
    return boost::math::lgamma(x);
}

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta requires positive arguments");
    return boost::math::beta(a, b);
}

}  // namespace idv
