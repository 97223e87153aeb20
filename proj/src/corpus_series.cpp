#include "corpus_internal.hpp"
#include "idv/exact.hpp"
#include "idv/seqsum.hpp"
#include "idv/specfun.hpp"

namespace idv::detail {

namespace {

using namespace cf;

constexpr double kGamma = 0.57721566490153286;

Expr PI() { return c("pi"); }

// Asymptotic H(x) for real x, accurate to O(x^-4).
double H_asym(double x) { return std::log(x) + kGamma + 0.5 / x - 1.0 / (12.0 * x * x); }

// Partial sums S_N at N = n0 2^k, extrapolated in powers of 1/N.
NumericResult partial_sum_limit(const Term& term, long start, long n0, int K) {
    std::vector<double> samples;
    KahanSum s;
    long n = start;
    for (int k = 0; k <= K; ++k) {
        const long N = n0 << k;
        for (; n <= N; ++n) s += term(n);
        samples.push_back(s.value());
    }
    LimitOptions lo;
    lo.K = K;
    lo.n0 = static_cast<double>(n0);
    for (int j = 1; j <= K; ++j) lo.exponents.push_back(j);
    return limit_from_samples(samples, lo);
}

// Sum_{k>=0} (-1)^k / (a + 2k), CVZ-accelerated.
double alt_recip(double a) {
    std::vector<double> v(40);
    for (int k = 0; k < 40; ++k) v[k] = 1.0 / (a + 2.0 * k);
    return cvz(v).value;
}

// Taylor remainder sum_{j>n} (-1)^j x^{2j + odd}/(2j + odd)!.
double taylor_rest(double x, long n, int odd) {
    double term = 1.0;
    for (long j = 1; j <= 2 * (n + 1) + odd; ++j) term *= x / static_cast<double>(j);
    if ((n + 1) % 2) term = -term;
    KahanSum s;
    for (long j = n + 1; std::fabs(term) > 1e-30; ++j) {
        s += term;
        const double a = 2.0 * j + odd;
        term *= -x * x / ((a + 1.0) * (a + 2.0));
    }
    return s.value();
}

Measurement m4836b(const EvalContext& ctx) {
    const long P = ctx.fast() ? 1000000 : 10000000;
    KahanSum s;
    for (long p : primes_upto(P))
        if (p > 2) s += std::log1p(-1.0 / (static_cast<double>(p) * p));
    // primes above P: sum 1/p^2 against the density 1/log t gives E1(log P);
    // the remainder is bounded with |pi(t) - li(t)| <= sqrt(t) log t / (8 pi)
    const double L = std::log(static_cast<double>(P));
    const double tail = -std::expint(-L);
    const double bound = 3.0 * L / (8.0 * kPi * std::pow(static_cast<double>(P), 1.5)) + 1.0 / (3.0 * P * P * P);
    Measurement m;
    m.computed = std::exp(s.value() - tail);
    m.kernel_err = m.computed * bound;
    m.note = "tail bound assumes the Riemann-hypothesis form of the prime counting error";
    return m;
}

Measurement m4836c(const EvalContext& ctx) {
    const long P = ctx.fast() ? 1000000 : 10000000;
    const auto primes = primes_upto(P);
    std::vector<char> is_prime(static_cast<std::size_t>(P + 1), 0);
    for (long p : primes) is_prime[p] = 1;
    KahanSum s;
    for (long q = 9; q <= P; q += 2)
        if (!is_prime[q]) s += std::log1p(-1.0 / (static_cast<double>(q) * q));
    // all odd q > P, minus the primes among them
    const long Q = (P % 2 == 0) ? P + 1 : P + 2;
    auto g = [](double n) { const double q = 2.0 * n + 1.0; return std::log1p(-1.0 / (q * q)); };
    NumericResult odd = integrate(g, Interval::semi_infinite((Q - 1) / 2 - 0.5), ctx.quad(1e-16));
    const double L = std::log(static_cast<double>(P));
    const double prime_tail = -std::expint(-L);
    const double bound = 3.0 * L / (8.0 * kPi * std::pow(static_cast<double>(P), 1.5)) + 1.0 / (3.0 * P * P * P);
    Measurement m;
    m.computed = std::exp(s.value() + odd.value + prime_tail);
    m.kernel_err = m.computed * (bound + odd.err + 1.0 / (static_cast<double>(P) * P * P));
    m.note = "tail bound assumes the Riemann-hypothesis form of the prime counting error";
    return m;
}

// sum_{m,n>=1} 1/(m n (m + n + r))
Measurement m12494d(const EvalContext& ctx, int r) {
    const long N = ctx.fast() ? 1000 : 4000;
    const long M = ctx.fast() ? 1000 : 4000;
    DoubleTail tail;
    tail.row = [N, r](long m) {
        const double md = static_cast<double>(m);
        return TailStrategy::integral(N, [md, r](double x) { return 1.0 / (md * x * (md + x + r)); });
    };
    // row sums behave like H_{m+r}/(m(m+r))
    tail.outer = TailStrategy::integral(M, [r](double x) { return H_asym(x + r) / (x * (x + r)); });
    auto term = [r](long m, long n) {
        return 1.0 / (static_cast<double>(m) * static_cast<double>(n) * static_cast<double>(m + n + r));
    };
    return from(sum_double(term, tail, ctx.tol(1e-10)));
}

}  // namespace

void register_series(std::vector<Identity>& out) {
    const auto S = Category::Series, D = Category::DoubleSeries, P = Category::Product;
    const Expr z3 = c("zeta3"), l2 = c("log2");

    add(out, "amm-12398", S, rat(2) / (c("e") - rat(1)), 1e-10,
        [](const EvalContext& ctx) {
            return from(sum_series([](long n) { return 1.0 / std::sinh(std::ldexp(1.0, static_cast<int>(n))); }, 0,
                                   TailStrategy::geometric(0.5, 64), ctx.tol(1e-12)));
        },
        "sum_{n>=0} 1/sinh(2^n) = 2/(e - 1)", {"headline"});

    add(out, "amm-12470", S, log(exp(rat(2)) + rat(1)) - rat(2), 1e-10,
        [](const EvalContext& ctx) {
            // log tanh y = log1p(-2/(e^{2y} + 1))
            auto logtanh = [](double y) { return std::log1p(-2.0 / (std::exp(2.0 * y) + 1.0)); };
            return from(sum_series(
                [&](long n) {
                    const double y = std::ldexp(1.0, static_cast<int>(n));
                    return std::ldexp(logtanh(y) - logtanh(0.5 * y), static_cast<int>(-n));
                },
                1, TailStrategy::geometric(0.5, 80), ctx.tol(1e-12)));
        },
        "sum_{n>=1} 2^{-n} log(tanh 2^n / tanh 2^{n-1}) = log(e^2 + 1) - 2");

    add(out, "amm-12494d", D, rat(2) * z3, 1e-10, [](const EvalContext& ctx) { return m12494d(ctx, 0); },
        "S(r) = sum_{m,n>=1} 1/(m^2 n + m n^2 + r m n); S(0) = 2 zeta(3)");
    add(out, "amm-12494d3", D, rat(85, 54), 1e-10, [](const EvalContext& ctx) { return m12494d(ctx, 3); },
        "S(r) = sum_{m,n>=1} 1/(m^2 n + m n^2 + r m n) = ((H_r)^2 + H_r^(2))/r at r = 3",
        {}, "double-series side of the same identity whose integral side is amm-12494");

    add(out, "mm-2167a", S, rat(7, 4) - log(PI()) - rat(3) * z3 / pow(PI(), rat(2)), 1e-10,
        [](const EvalContext& ctx) {
            auto zm1 = [](long m) {
                // zeta(2m) - 1 summed directly once the k = 2 term dominates
                if (m <= 3) return zeta(2.0 * m) - 1.0;
                KahanSum s;
                for (long k = 2;; ++k) {
                    const double t = std::pow(static_cast<double>(k), -2.0 * m);
                    s += t;
                    if (t < 1e-20 * s.value()) break;
                }
                return s.value();
            };
            return from(sum_series([&](long m) { return zm1(m) / (m + 2.0); }, 1, TailStrategy::geometric(0.3, 200),
                                   ctx.tol(1e-12)));
        },
        "sum_{m>=1} (zeta(2m) - 1)/(m + 2) = 7/4 - log pi - 3 zeta(3)/pi^2");

    add(out, "mm-2167b", P, PI() * exp(rat(3) * z3 / pow(PI(), rat(2)) - rat(5, 4)), 1e-10,
        [](const EvalContext& ctx) {
            // log of e^{1/2} e^{j^2} (1 - 1/j^2)^{j^4} = -sum_{k>=3} j^{4-2k}/k
            auto lf = [](long j) {
                const double x = 1.0 / (static_cast<double>(j) * j);
                double p = x, s = 0.0;
                for (int k = 3; k < 80 && p > 1e-19 * x; ++k, p *= x) s += p / k;
                return -s;
            };
            NumericResult r = product_infinite_log(lf, 2, TailStrategy::asymptotic(-1.0 / 3.0, 2.0, ctx.budget(20000)),
                                                   ctx.tol(1e-11));
            // the e^{n/2} prefactor leaves one extra e^{1/2}
            r.value *= std::exp(0.5);
            r.err *= std::exp(0.5);
            return from(r);
        },
        "L = lim e^{n/2} prod_{j=2}^n e^{j^2} (1 - 1/j^2)^{j^4} = pi exp(3 zeta(3)/pi^2 - 5/4)");

    add(out, "mm-2171a", S, rat(-1, 2) * sin(rat(1)), 1e-10,
        [](const EvalContext& ctx) {
            return from(sum_series([](long n) { return taylor_rest(1.0, n, 0); }, 0, TailStrategy::geometric(0.5, 60),
                                   ctx.tol(1e-13)));
        },
        "C(x) = sum_{n>=0} (cos x - T_{2n}(x)) = -x sin x / 2 at x = 1, T the Taylor polynomial");
    add(out, "mm-2171b", S, (cos(rat(1)) - sin(rat(1))) / rat(2), 1e-10,
        [](const EvalContext& ctx) {
            return from(sum_series([](long n) { return taylor_rest(1.0, n, 1); }, 0, TailStrategy::geometric(0.5, 60),
                                   ctx.tol(1e-13)));
        },
        "S(x) = sum_{n>=0} (sin x - T_{2n+1}(x)) = (x cos x - sin x)/2 at x = 1");

    add(out, "crux-4825", S, log(rat(4)), 1e-10,
        [](const EvalContext& ctx) {
            const long N = ctx.budget(100000);
            std::vector<double> O(static_cast<std::size_t>(N + 2));
            KahanSum run;
            for (long k = 1; k <= N + 1; ++k) {
                run += 1.0 / (2.0 * k - 1.0);
                O[k] = run.value();
            }
            // O_n = H_{2n} - H_n / 2
            auto model = [](double x) { return (H_asym(2.0 * x) - 0.5 * H_asym(x)) / (x * (x + 1.0)); };
            return from(sum_series([&](long n) { return O[n] / (n * (n + 1.0)); }, 1, TailStrategy::integral(N, model),
                                   ctx.tol(1e-11)));
        },
        "sum_{n>=1} O_n/(n(n+1)) = log 4 with O_n = sum_{k<=n} 1/(2k-1)");

    add(out, "crux-4826", S, pow(PI(), rat(2)) / rat(12) - rat(1, 2), 1e-10,
        [](const EvalContext& ctx) {
            const long N = ctx.budget(20000);
            std::vector<double> H(static_cast<std::size_t>(N + 2));
            KahanSum run;
            for (long k = 1; k <= N + 1; ++k) {
                run += 1.0 / k;
                H[k] = run.value();
            }
            auto model = [](double x) { return H_asym(x) / (x * (x + 1.0) * (x + 2.0)); };
            return from(sum_series([&](long k) { return H[k] / (k * (k + 1.0) * (k + 2.0)); }, 1,
                                   TailStrategy::integral(N, model), ctx.tol(1e-11)));
        },
        "sum_{k>=1} H_k/(k(k+1)(k+2)) = pi^2/12 - 1/2", {"headline"});

    add(out, "crux-4894", S, rat(3), 1e-5,
        [](const EvalContext& ctx) {
            const long N = ctx.budget(100000);
            std::vector<double> H(static_cast<std::size_t>(N + 3));
            KahanSum run;
            H[0] = 0.0;
            for (long k = 1; k <= N + 2; ++k) {
                run += 1.0 / k;
                H[k] = run.value();
            }
            auto model = [](double x) { return H_asym(x - 1.0) * H_asym(x + 1.0) / (x * (x + 1.0)); };
            return from(sum_series([&](long n) { return H[n - 1] * H[n + 1] / (n * (n + 1.0)); }, 1,
                                   TailStrategy::integral(N, model), ctx.tol(1e-7)));
        },
        "sum_{n>=1} H_{n-1} H_{n+1} / (n(n+1)) = 3", {"slow"},
        "tail closed by integrating the term with H replaced by its asymptotic expansion");

    add(out, "crux-4903", S, l2 / rat(2) + PI() / rat(8), 1e-10,
        [](const EvalContext& ctx) {
            return from(partial_sum_limit([](long n) { return -0.25 / n + alt_recip(2.0 * n - 1.0); }, 1,
                                          ctx.fast() ? 32 : 64, ctx.fast() ? 6 : 8));
        },
        "sum_{n>=1} (-1/(4n) + sum_{k>=0} (-1)^k/(2n + 2k - 1)) = (log 2)/2 + pi/8", {"alternating"});

    add(out, "crux-4965a", S, rat(-1, 8) * l2 * l2 + rat(7) * pow(PI(), rat(2)) / rat(96), 1e-10,
        [](const EvalContext& ctx) {
            return from(sum_alternating([](long n) { return alt_recip(static_cast<double>(n)) / n; }, 1,
                                        ctx.tol(1e-12)));
        },
        "A = sum_{n>=1} (-1)^{n-1} S_n / n = -log^2 2 / 8 + 7 pi^2/96, S_n = sum_{k>=0} (-1)^k/(n + 2k)",
        {"alternating"});
    add(out, "crux-4965b", S, rat(1, 8) * l2 * l2 + rat(11) * pow(PI(), rat(2)) / rat(96), 1e-10,
        [](const EvalContext& ctx) {
            return from(partial_sum_limit([](long n) { return alt_recip(static_cast<double>(n)) / n; }, 1,
                                          ctx.fast() ? 32 : 64, ctx.fast() ? 6 : 8));
        },
        "B = sum_{n>=1} S_n / n = log^2 2 / 8 + 11 pi^2/96", {"alternating"});

    add(out, "crux-4988", S, rat(-1, 2), 1e-9,
        [](const EvalContext& ctx) {
            // (2n-1) psi1(n) - 2 = (2n-1) tail(n) - 1/(2n^2), tail = psi1 - 1/n - 1/(2n^2)
            return from(partial_sum_limit(
                [](long n) {
                    const double x = static_cast<double>(n);
                    return (2.0 * x - 1.0) * trigamma_tail(x) - 0.5 / (x * x);
                },
                1, ctx.fast() ? 32 : 64, ctx.fast() ? 6 : 8));
        },
        "sum_{n>=1} ((2n - 1) psi_1(n) - 2) = -1/2", {"headline", "trigamma"});

    const Expr r3 = c("sqrt3");
    const Expr a = rat(13) * z3 / rat(27), b = rat(2) * pow(PI(), rat(3)) / (rat(81) * r3);
    const Expr ta = rat(13) * z3 / rat(36), tb = rat(5) * pow(PI(), rat(3)) / (rat(162) * r3);
    auto cube = [](double off) {
        return [off](const EvalContext& ctx) {
            auto g = [off](double n) { const double q = 3.0 * n + off; return 1.0 / (q * q * q); };
            return from(sum_series([&](long n) { return g(static_cast<double>(n)); }, 0,
                                   TailStrategy::integral(ctx.budget(20000), g), ctx.tol(1e-12)));
        };
    };
    auto alt_cube = [](double off) {
        return [off](const EvalContext& ctx) {
            return from(sum_alternating([off](long n) { const double q = 3.0 * n + off; return 1.0 / (q * q * q); }, 0,
                                        ctx.tol(1e-13)));
        };
    };
    add(out, "elem-1434s1", S, a + b, 1e-10, cube(1.0), "S_1 = sum_{n>=0} 1/(3n+1)^3 = (13/27) zeta(3) + 2 pi^3/(81 sqrt3)");
    add(out, "elem-1434s2", S, a - b, 1e-10, cube(2.0), "S_2 = sum_{n>=0} 1/(3n+2)^3 = (13/27) zeta(3) - 2 pi^3/(81 sqrt3)");
    add(out, "elem-1434t1", S, ta + tb, 1e-10, alt_cube(1.0),
        "T_1 = sum_{n>=0} (-1)^n/(3n+1)^3 = (13/36) zeta(3) + 5 pi^3/(162 sqrt3)", {"alternating"});
    add(out, "elem-1434t2", S, tb - ta, 1e-10, alt_cube(2.0),
        "T_2 = sum_{n>=0} (-1)^n/(3n+2)^3 = 5 pi^3/(162 sqrt3) - (13/36) zeta(3)", {"alternating"});

    add(out, "elem-1437alt", S, rat(-1) / l2, 1e-8,
        [](const EvalContext& ctx) {
            constexpr int kTerms = 40;
            std::vector<double> g(kTerms + 1);
            bool bounds = true;
            for (int k = 1; k <= kTerms + 0; ++k) {
                const Rational ak = gregory_coefficient(k);
                g[k] = to_double(ak);
                bounds = bounds && ak * 3 * k * k >= 1 && ak * k <= 1;
            }
            // a_0 = -1, then sum_{k>=1} (-1)^k a_k = -sum_{j>=0} (-1)^j a_{j+1}
            NumericResult r = sum_alternating([&](long j) { return g[j + 1]; }, 0, ctx.tol(1e-12), kTerms);
            Measurement m;
            m.computed = -1.0 - r.value;
            m.kernel_err = r.err;
            m.holds = bounds;
            if (!bounds) m.note = "a Gregory coefficient violates 1/(3k^2) <= a_k <= 1/k";
            return m;
        },
        "a_k = (-1)^{k+1} int_0^1 binom(s,k) ds, a_0 = -1: sum_{k>=0} (-1)^k a_k = -1/log 2, and 1/(3k^2) <= a_k <= 1/k",
        {"alternating", "gregory"},
        "only the alternating sum is checked; with a_0 = -1 the plain sum has no consistent sign convention");

    // ---- products
    add(out, "mm-2147", P, rat(2) * sinh(PI()) / (rat(5) * PI()), 1e-10,
        [](const EvalContext& ctx) {
            auto g = [](double n) { return std::log1p(5.0 / (n * n * n * n - 1.0)); };
            return from(product_infinite_log([&](long n) { return g(static_cast<double>(n)); }, 2,
                                             TailStrategy::integral(ctx.budget(5000), g), ctx.tol(1e-12)));
        },
        "prod_{n>=2} (n^4 + 4)/(n^4 - 1) = 2 sinh(pi)/(5 pi)", {"headline"});

    add(out, "mm-2187", P, sinh(rat(2)) / (cosh(rat(2)) - cosh(rat(1))), 1e-10,
        [](const EvalContext& ctx) {
            const double r = 2.0, s = 1.0;
            // cosh(2^n s)/cosh(2^n r) without overflow
            auto lf = [&](long n) {
                const double t = std::ldexp(1.0, static_cast<int>(n));
                const double ratio = std::exp(t * (s - r)) * (1.0 + std::exp(-2.0 * t * s)) / (1.0 + std::exp(-2.0 * t * r));
                return std::log1p(ratio);
            };
            return from(product_infinite_log(lf, 0, TailStrategy::geometric(0.5, 64), ctx.tol(1e-12)));
        },
        "prod_{n>=0} (1 + cosh(2^n s)/cosh(2^n r)) = sinh r/(cosh r - cosh s) at r = 2, s = 1");

    add(out, "amm-11226", P, cos(rat(1)) * cosh(rat(1)), 1e-10,
        [](const EvalContext& ctx) {
            const double c4 = std::pow(2.0 / kPi, 4);
            auto g = [c4](double n) { const double q = 2.0 * n + 1.0; return std::log1p(-c4 / (q * q * q * q)); };
            return from(product_infinite_log([&](long n) { return g(static_cast<double>(n)); }, 0,
                                             TailStrategy::integral(ctx.budget(5000), g), ctx.tol(1e-12)));
        },
        "prod_{n>=0} ((2n+1)^4 - (2/pi)^4)/(2n+1)^4 = cos 1 cosh 1", {},
        "the value is cos 1 cosh 1; a variant with an extra factor 1/e is wrong");

    add(out, "amm-10588", P, (exp(PI() / rat(2)) + exp(-PI() / rat(2))) / (PI() * exp(c("euler_gamma"))), 1e-10,
        [](const EvalContext& ctx) {
            auto g = [](double n) { return std::log1p(1.0 / n + 0.5 / (n * n)) - 1.0 / n; };
            return from(product_infinite_log([&](long n) { return g(static_cast<double>(n)); }, 1,
                                             TailStrategy::integral(ctx.budget(20000), g), ctx.tol(1e-12)));
        },
        "prod_{n>=1} e^{-1/n} (1 + 1/n + 1/(2n^2)) = (e^{pi/2} + e^{-pi/2})/(pi e^gamma)");

    add(out, "amm-10605", P, PI() / sinh(PI()), 1e-10,
        [](const EvalContext& ctx) {
            auto g = [](double n) { return std::log1p(-2.0 / (n * n + 1.0)); };
            return from(product_infinite_log([&](long n) { return g(static_cast<double>(n)); }, 2,
                                             TailStrategy::integral(ctx.budget(20000), g), ctx.tol(1e-12)));
        },
        "prod_{n>=1, n != m} (n^2 - m^2)/(n^2 + m^2) = (-1)^{m+1} pi m / sinh(pi m) at m = 1");

    add(out, "crux-4836a", P, PI() / rat(4), 1e-10,
        [](const EvalContext& ctx) {
            auto g = [](double n) { const double q = 2.0 * n + 1.0; return std::log1p(-1.0 / (q * q)); };
            return from(product_infinite_log([&](long n) { return g(static_cast<double>(n)); }, 1,
                                             TailStrategy::integral(ctx.budget(20000), g), ctx.tol(1e-12)));
        },
        "prod_{n>=1} 4n(n+1)/(2n+1)^2 = pi/4", {"headline"});
    add(out, "crux-4836b", P, rat(8) / pow(PI(), rat(2)), 1e-10, m4836b,
        "prod over n >= 1 with 2n+1 prime of 4n(n+1)/(2n+1)^2 = 8/pi^2", {"headline", "primes"});
    add(out, "crux-4836c", P, pow(PI(), rat(3)) / rat(32), 1e-10, m4836c,
        "prod over n >= 1 with 2n+1 not prime of 4n(n+1)/(2n+1)^2 = pi^3/32", {"headline", "primes"});

    add(out, "elem-1281a", P, rat(4) * PI() / pow(c("e"), rat(3)), 1e-10,
        [](const EvalContext& ctx) {
            // 2 + n log((n-1)/(n+1)) = -2 sum_{j>=1} n^{-2j}/(2j+1)
            auto g = [](double n) {
                const double x = 1.0 / (n * n);
                double p = x, s = 0.0;
                for (int j = 1; j < 200 && p > 1e-19 * x; ++j, p *= x) s += p / (2 * j + 1);
                return -2.0 * s;
            };
            return from(product_infinite_log([&](long n) { return g(static_cast<double>(n)); }, 2,
                                             TailStrategy::integral(ctx.budget(20000), g), ctx.tol(1e-12)));
        },
        "P = prod_{n>=2} e^2 ((n-1)/(n+1))^n = 4 pi / e^3");
    add(out, "elem-1281b", P, sqrt(rat(2) * PI()) / c("e"), 1e-10,
        [](const EvalContext& ctx) {
            // 1 - (n + 1/2) log(1 + 1/n) = -sum_{j>=1} x^{2j}/(2j+1), x = 1/(2n+1)
            auto g = [](double n) {
                const double x = 1.0 / (2.0 * n + 1.0), x2 = x * x;
                double p = x2, s = 0.0;
                for (int j = 1; j < 200 && p > 1e-19 * x2; ++j, p *= x2) s += p / (2 * j + 1);
                return -s;
            };
            return from(product_infinite_log([&](long n) { return g(static_cast<double>(n)); }, 1,
                                             TailStrategy::integral(ctx.budget(20000), g), ctx.tol(1e-12)));
        },
        "P* = prod_{n>=1} e (n/(n+1))^{n+1/2} = sqrt(2 pi)/e");
}

}  // namespace idv::detail
