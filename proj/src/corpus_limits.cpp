#include "corpus_internal.hpp"
#include "idv/seqsum.hpp"
#include "idv/solve.hpp"

namespace idv::detail {

namespace {

using namespace cf;

Expr PI() { return c("pi"); }

// Samples a(n) at n = n0 2^k, k = 0..K, and extrapolates.
NumericResult grid_limit(const std::function<double(long)>& a, long n0, int K, LimitOptions lo = {}) {
    std::vector<double> s;
    for (int k = 0; k <= K; ++k) s.push_back(a(n0 << k));
    lo.K = K;
    lo.n0 = static_cast<double>(n0);
    return limit_from_samples(s, lo);
}

LimitOptions powers(int K) {
    LimitOptions lo;
    for (int j = 1; j <= K; ++j) lo.exponents.push_back(j);
    return lo;
}

Measurement exp_of(NumericResult r) {
    Measurement m;
    m.computed = std::exp(r.value);
    m.kernel_err = m.computed * std::expm1(r.err);
    if (!r.converged) m.note = "kernel reported non-convergence";
    return m;
}

// splits near the peak of width ~1/n
std::vector<double> peak_splits(long n, double hi) {
    std::vector<double> v;
    for (double c : {0.5, 2.0, 8.0, 32.0})
        if (c / n < hi) v.push_back(c / n);
    return v;
}

}  // namespace

void register_limits(std::vector<Identity>& out) {
    const auto L = Category::Limit;

    add(out, "amm-12340", L, PI() / rat(4) * sqrt(c("e")), 1e-5,
        [](const EvalContext& ctx) {
            // x = 1/2 + t folds the integral onto [0, 1/2]; the 2^n factors cancel
            auto a = [&](long n) {
                const double dn = static_cast<double>(n);
                auto f = [dn](double t) {
                    const double up = std::log1p(2.0 * t), dn_ = std::log1p(-2.0 * t);
                    return 2.0 * std::cosh(t) * std::exp(-dn * up) / (1.0 + std::exp(dn * (dn_ - up)));
                };
                NumericResult r = integrate(f, Interval::finite(0.0, 0.5, peak_splits(n, 0.5)), ctx.quad(1e-15));
                return dn * std::exp(0.5) * r.value;
            };
            const int K = ctx.fast() ? 6 : 7;
            return from(grid_limit(a, 16, K, powers(K)));
        },
        "n/2^n int_0^1 f(x)/(x^n + (1-x)^n) dx -> (pi/4) f(1/2), with f = e^x");

    add(out, "amm-12362", L, PI() / rat(2), 1e-5,
        [](const EvalContext& ctx) {
            // x = pi/4 + t: sqrt2 cos x, sqrt2 sin x become sqrt(1 -+ sin 2t)
            auto a = [&](long n) {
                const double h = 0.5 * static_cast<double>(n);
                auto f = [h](double t) {
                    const double s = std::sin(2.0 * t);
                    const double up = std::log1p(s), down = std::log1p(-s);
                    return std::exp(-h * up) / (1.0 + std::exp(h * (down - up)));
                };
                NumericResult r = integrate(f, Interval::finite(0.0, kPi / 4, peak_splits(n, kPi / 4)), ctx.quad(1e-15));
                return 2.0 * static_cast<double>(n) * r.value;
            };
            const int K = ctx.fast() ? 6 : 7;
            return from(grid_limit(a, 16, K, powers(K)));
        },
        "I_n = int_0^{pi/2} n / ((sqrt2 cos x)^n + (sqrt2 sin x)^n) dx -> pi/2");

    add(out, "amm-12510", L, (rat(1, 2) + sqrt(rat(1, 4) + rat(2))) / rat(2), 1e-5,
        [](const EvalContext&) {
            // f_n = (f_{n-1} + 1)/R_n unrolls the sum of tail products
            const double cc = 2.0;
            double R = std::sqrt(cc), f = 1.0 / R;
            long at = 1;
            auto a = [&](long n) {
                for (; at < n; ++at) {
                    R = std::sqrt(cc + R);
                    f = (f + 1.0) / R;
                }
                return f;
            };
            LimitOptions lo;
            lo.method = LimitMethod::WynnEpsilon;
            return from(grid_limit(a, 4, 4, lo));
        },
        "R_1 = sqrt c, R_{n+1} = sqrt(c + R_n), f_n = sum_{k=1}^n prod_{j=k}^n 1/R_j -> (1/2 + sqrt(1/4 + c))/c; c = 2",
        {}, "converges geometrically, so the epsilon algorithm replaces the power-law table");

    add(out, "amm-12518", L, rat(4, 3), 1e-5,
        [](const EvalContext& ctx) {
            const double v = (std::sqrt(3.0) + 1.0) / (std::sqrt(3.0) - 1.0);
            // 6n * 4 * (5 pi/12) is a multiple of 2 pi, so only the drift from
            // 5 pi/12 matters inside the sine
            KahanSum D;
            long k = 1;
            auto a = [&](long n) {
                for (; k <= 6 * n; ++k) {
                    const double j2 = static_cast<double>(k - 1) * static_cast<double>(k - 1);
                    D += std::atan((v * j2 + 2.0) / (j2 - 2.0 * v)) - 5.0 * kPi / 12.0;
                }
                return static_cast<double>(n) * std::sin(4.0 * D.value());
            };
            const int K = ctx.fast() ? 6 : 7;
            return from(grid_limit(a, 8, K, powers(K)));
        },
        "n sin(4 sum_{k=1}^{6n} arctan u_k) -> 4/3, u_k = (v (k-1)^2 + 2)/((k-1)^2 - 2v), v = (sqrt3 + 1)/(sqrt3 - 1)");

    add(out, "amm-11333", L, PI(), 1e-5,
        [](const EvalContext& ctx) {
            KahanSum s;
            long n = 2;
            auto a = [&](long N) {
                for (; n <= N; ++n) {
                    const double x = static_cast<double>(n);
                    s += 2.0 * (x * x - 1.0) * std::log1p(-1.0 / (x * x)) + x * std::log1p(2.0 / (x - 1.0));
                }
                return s.value();
            };
            const int K = ctx.fast() ? 6 : 8;
            return exp_of(grid_limit(a, 16, K, powers(K)));
        },
        "P_N = prod_{n=2}^N ((n^2 - 1)/n^2)^{2(n^2 - 1)} ((n + 1)/(n - 1))^n -> pi");

    add(out, "amm-11456", L, cosh(PI()) / PI(), 1e-5,
        [](const EvalContext& ctx) {
            KahanSum s;
            long m = 1;
            auto a = [&](long n) {
                for (; m <= n; ++m) {
                    const double x = static_cast<double>(m);
                    s += std::log1p(-1.0 / x + 1.25 / (x * x));
                }
                return std::log(static_cast<double>(n)) + s.value();
            };
            const int K = ctx.fast() ? 6 : 8;
            return exp_of(grid_limit(a, 16, K, powers(K)));
        },
        "a_m = 1 - 1/m + 5/(4m^2): n prod_{m=1}^n a_m -> cosh(pi)/pi");

    add(out, "mm-2212", L, log(rat(1) + c("sqrt2")), 1e-5,
        [](const EvalContext& ctx) {
            auto a = [](long n) {
                KahanSum s;
                const double x = static_cast<double>(n);
                for (long k = 1; k <= n; ++k) s += std::asinh(1.0 / std::hypot(x, static_cast<double>(k)));
                return s.value();
            };
            const int K = ctx.fast() ? 6 : 7;
            return from(grid_limit(a, 8, K, powers(K)));
        },
        "S_n = sum_{k=1}^n arsinh(1/sqrt(n^2 + k^2)) -> arsinh 1 = log(1 + sqrt2)", {"headline"});

    add(out, "mm-2216", L, c("log2"), 1e-5,
        [](const EvalContext& ctx) {
            auto a = [&](long n) {
                const double dn = static_cast<double>(n);
                auto f = [dn](double x) {
                    const double lo = 2.0 * dn * std::log1p(-x), hi = dn * std::log1p(x);
                    if (hi > 50.0) return (std::exp(lo + hi) - std::exp(lo)) / x;
                    return std::exp(lo) * std::expm1(hi) / x;
                };
                return integrate(f, Interval::finite(0.0, 1.0, peak_splits(n, 1.0)), ctx.quad(1e-15)).value;
            };
            const int K = ctx.fast() ? 6 : 7;
            return from(grid_limit(a, 16, K, powers(K)));
        },
        "I_n = int_0^1 (1 - x)^{2n} ((1 + x)^n - 1)/x dx -> log 2");

    add(out, "cmj-1294", L, c("e"), 1e-5,
        [](const EvalContext& ctx) {
            auto a = [](long n) {
                long twice = 0;
                for (long k = 1; k <= n; ++k) twice += 2 * k;
                const double s = static_cast<double>(twice) / (static_cast<double>(n) * static_cast<double>(n));
                return std::exp(static_cast<double>(n) * std::log(s));
            };
            const int K = ctx.fast() ? 5 : 6;
            return from(grid_limit(a, 8, K, powers(K)));
        },
        "L_n = (sum_{k=1}^n 2k/n^2)^n -> e", {"headline"});

    add(out, "crux-4862", L, rat(1), 1e-5,
        [](const EvalContext& ctx) {
            constexpr int m = 2;
            auto lbinom = [](double n, double k) {
                return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
            };
            auto a = [&](long n) {
                const double dn = static_cast<double>(n);
                KahanSum s;
                for (long k = 0; k <= n; ++k) {
                    const double dk = static_cast<double>(k);
                    s += std::exp(lbinom(m + dk, dk) + lbinom(m + dn + 1.0, dn - dk) - dn * std::log(2.0) -
                                  m * std::log(dn));
                }
                return s.value();
            };
            const int K = ctx.fast() ? 5 : 6;
            return from(grid_limit(a, 16, K, powers(K)));
        },
        "L_m(n) = 2^{-n} n^{-m} sum_{k=0}^n C(m+k, k) C(m+n+1, n-k) -> 2/m!; m = 2");

    add(out, "crux-4870", L, rat(0), 1e-5,
        [](const EvalContext& ctx) {
            constexpr double q = 3.0;
            KahanSum a;
            a += 1.0;
            long at = 1;
            auto dev = [&](long n) {
                for (; at < n; ++at) a += 1.0 / (q * a.value());
                return a.value() - std::sqrt(2.0 * static_cast<double>(n) / q);
            };
            // a_n^2 = 2n/q + log(n)/(2q) + C + o(1), so the deviation decays
            // like log(n)/sqrt(n) and power-law Richardson does not apply
            LimitOptions lo;
            lo.basis = {
                [](double n) { return std::log(n) / std::sqrt(n); },
                [](double n) { return 1.0 / std::sqrt(n); },
                [](double n) { return std::log(n) * std::log(n) / (n * std::sqrt(n)); },
                [](double n) { return std::log(n) / (n * std::sqrt(n)); },
                [](double n) { return 1.0 / (n * std::sqrt(n)); },
            };
            return from(grid_limit(dev, 64, ctx.fast() ? 8 : 10, lo));
        },
        "a_1 = c, a_{n+1} = a_n + 1/(q a_n): a_n - sqrt(2n/q) -> 0; q = 3, a_1 = 1", {},
        "extrapolated with a fitted log/power basis");

    // x_n = 2n + 1 + e_n, where e_n solves e = 1/x + 1/(x (x-1)^{2n+1}); this is
    // P_n(x) = 1 divided through by x (x-1)^{2n+1}
    auto excess = [](long n) {
        const double dn = static_cast<double>(n);
        auto h = [dn](double e) {
            const double x = 2.0 * dn + 1.0 + e;
            return e - 1.0 / x - std::exp(-std::log(x) - (2.0 * dn + 1.0) * std::log(x - 1.0));
        };
        return root_bracketed(h, make_bracket(h, 1e-300, 1.0), 1e-18);
    };
    add(out, "crux-4909a", L, rat(1), 1e-5,
        [excess](const EvalContext& ctx) {
            const int K = ctx.fast() ? 5 : 6;
            return from(grid_limit([&](long n) { return 1.0 + excess(n); }, 8, K, powers(K)));
        },
        "x_n is the positive solution of (x - 1)^{2n+1} (x^2 - (2n+1) x - 1) = 1; x_n - 2n -> 1");
    add(out, "crux-4909b", L, rat(1, 2), 1e-5,
        [excess](const EvalContext& ctx) {
            const int K = ctx.fast() ? 5 : 6;
            return from(grid_limit([&](long n) { return static_cast<double>(n) * excess(n); }, 8, K, powers(K)));
        },
        "same x_n: n (x_n - 2n - 1) -> 1/2");

    add(out, "crux-4915", L, rat(0), 1e-5,
        [](const EvalContext& ctx) {
            const double l2 = std::log(2.0);
            auto r = [&](long n) {
                // 1/(k(k+n+1)) = (1/k - 1/(k+n+1))/(n+1)
                const double m = static_cast<double>(n + 1);
                const double T = sum_alternating([m](long k) { return 1.0 / (static_cast<double>(k) + m); }, 1, 1e-17)
                                     .value;
                const double S = (l2 - T) / m;
                const double x = static_cast<double>(n);
                return x * x * x * S - (l2 * x * x + (-0.5 - l2) * x + l2 + 1.25);
            };
            const int K = ctx.fast() ? 5 : 6;
            return from(grid_limit(r, 16, K, powers(K)));
        },
        "S_n = sum_{k>=1} (-1)^{k+1}/(k(k+n+1)): n^3 S_n - (log2 n^2 - (1/2 + log2) n + log2 + 5/4) -> 0");

    add(out, "crux-4959", L, rat(1, 2), 1e-5,
        [](const EvalContext&) {
            auto a = [](long n) {
                const double N = 2.0 * static_cast<double>(n);
                KahanSum s;
                for (long k = 1; k <= 2 * n; ++k) s += ((k % 2) ? -1.0 : 1.0) * std::pow(static_cast<double>(k) / N, 1.5);
                return s.value();
            };
            // alternating Euler-Maclaurin: odd derivatives of x^{3/2} plus the
            // constant term, which scales as n^{-3/2}
            LimitOptions lo;
            lo.exponents = {1.0, 1.5, 3.0, 5.0, 7.0, 9.0};
            return from(grid_limit(a, 16, 6, lo));
        },
        "S_n = sum_{k=1}^{2n} (-1)^k (k/(2n))^a -> 1/2; a = 3/2", {"headline"});

    add(out, "gaz-108G", L, PI() * c("e") / rat(2), 1e-5,
        [](const EvalContext& ctx) {
            // I_k = int_0^{pi/2} sin^k: I_0 = pi/2, I_1 = 1, I_k = (k-1)/k I_{k-2}
            std::vector<double> logI{std::log(kPi / 2), 0.0};
            KahanSum s;
            s += logI[1];
            long k = 2;
            auto a = [&](long n) {
                for (; k <= n; ++k) {
                    logI.push_back(logI[k - 2] + std::log((k - 1.0) / k));
                    s += logI[k];
                }
                const double dn = static_cast<double>(n);
                return std::log(dn) + 2.0 / dn * s.value();
            };
            // Stirling gives log(S_n) = L - log(pi n)/n + even powers of 1/n
            LimitOptions lo;
            lo.basis = {
                [](double n) { return std::log(n) / n; },
                [](double n) { return 1.0 / n; },
                [](double n) { return 1.0 / (n * n); },
                [](double n) { return 1.0 / (n * n * n * n); },
            };
            return exp_of(grid_limit(a, 8, ctx.fast() ? 6 : 8, lo));
        },
        "S_n = n (prod_{k=1}^n int_0^{pi/2} sin^k x dx)^{2/n} -> (pi/2) e", {"headline"});
}

}  // namespace idv::detail
