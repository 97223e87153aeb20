#include <complex>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "corpus_internal.hpp"
#include "idv/rational.hpp"
#include "idv/seqsum.hpp"
#include "idv/solve.hpp"

namespace idv::detail {

namespace {

using namespace cf;

// ---- inequalities

Measurement m1947(const EvalContext& ctx) {
    const long N = ctx.budget(100000);
    KahanSum s;
    for (long n = 0; n <= N; ++n) {
        s += std::fabs(std::cos(static_cast<double>(n)));
        if (s.value() < 0.5 * static_cast<double>(n)) return boolean(false, "fails at n = " + std::to_string(n));
    }
    return boolean(true);
}

Measurement m10857(const EvalContext&) {
    // the bounds approach tanh x like x^{2n+1}/(2n+1)!, far below binary64
    // resolution, so the comparison runs at 160 decimal digits
    using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;
    for (int tenth = 1; tenth <= 30; ++tenth) {
        const Big x = Big(tenth) / 10;
        const Big th = tanh(x);
        for (int n = 1; n <= 20; ++n) {
            Big C = 0, S_lo = 0, S_hi = 0, term = 1;  // term = x^j / j!
            for (int j = 0; j <= 2 * n + 1; ++j) {
                if (j % 2 == 0 && j <= 2 * n) C += term;
                if (j % 2 == 1) {
                    if (j <= 2 * n - 1) S_lo += term;
                    S_hi += term;
                }
                term = term * x / (j + 1);
            }
            if (!(S_lo / C < th && th < S_hi / C))
                return boolean(false, "bound fails at x = " + std::to_string(tenth / 10.0) + ", n = " + std::to_string(n));
        }
    }
    return boolean(true);
}

Measurement m4822(const EvalContext& ctx) {
    std::string why;
    for (int n = 1; n <= 10; ++n) {
        // x = cosh t turns T_n(x) into cosh(nt)
        const double dn = n;
        auto g = [dn](double t) {
            return std::exp2(-1.0 + 2.0 / dn) * (-std::expm1(-2.0 * t)) * std::exp(-t) *
                   std::pow(1.0 + std::exp(-2.0 * dn * t), -2.0 / dn);
        };
        NumericResult I = integrate(g, Interval::semi_infinite(0.0), ctx.quad(1e-14));
        const double upper = std::pow(4.0, 1.0 / dn) / 3.0;
        if (!(I.value - I.err > 1.0 / 3.0 && I.value + I.err < upper)) {
            why = "bounds fail at n = " + std::to_string(n);
            break;
        }
    }
    return boolean(why.empty(), why);
}

Measurement m12490(const EvalContext& ctx) {
    // a_n = (1/n) int_0^1 sin(2 pi n x) e^x dx, integrated over half-periods
    const long N = ctx.fast() ? 32 : 128;
    std::vector<double> a(static_cast<std::size_t>(N + 1), 0.0);
    double qerr = 0.0;
    for (long n = 1; n <= N; ++n) {
        std::vector<double> zeros;
        for (long k = 1; k < 2 * n; ++k) zeros.push_back(static_cast<double>(k) / (2.0 * n));
        const double w = 2.0 * kPi * static_cast<double>(n);
        NumericResult r = integrate([w](double x) { return std::sin(w * x) * std::exp(x); },
                                    Interval::finite(0.0, 1.0, zeros), ctx.quad(1e-13));
        a[n] = r.value / static_cast<double>(n);
        qerr += r.err / static_cast<double>(n);
    }
    // integrating by parts twice: a_n = (1-e)/(2 pi n^2) (1 - 1/(4 pi^2 n^2) + O(n^-4))
    const double c = (1.0 - std::exp(1.0)) / (2.0 * kPi);
    auto model = [c](double x) { return c / (x * x) * (1.0 - 1.0 / (4.0 * kPi * kPi * x * x)); };
    NumericResult s = sum_series([&](long n) { return a[static_cast<std::size_t>(n)]; }, 1,
                                 TailStrategy::integral(N, model), ctx.tol(1e-12));
    Measurement m = from(s);
    m.kernel_err += qerr;
    // companion claim for convex g: sum_n int_0^1 cos(2 pi n x) g(x) dx >= 0, with g = x^2
    KahanSum b;
    for (long n = 1; n <= 64; ++n) {
        const double w = 2.0 * kPi * static_cast<double>(n);
        b += integrate([w](double x) { return std::cos(w * x) * x * x; }, Interval::finite(0.0, 1.0),
                       ctx.quad(1e-14)).value;
    }
    m.holds = m.computed <= 0.0 && b.value() >= 0.0;
    if (!m.holds) m.note = "sign condition violated";
    return m;
}

Measurement m1453(const EvalContext&) {
    // exact: x rational > 1
    const std::vector<Rational> xs{Rational(101, 100), Rational(11, 10), Rational(3, 2), Rational(2),
                                   Rational(3),        Rational(5),      Rational(10),   Rational(100)};
    for (const auto& x : xs)
        for (int n = 1; n <= 12; ++n) {
            Rational lhs = 1;
            for (int i = 0; i < n - 1; ++i) lhs *= 1 - 1 / x;
            if (lhs > x / (x + n - 1)) return boolean(false, "fails at n = " + std::to_string(n));
        }
    return boolean(true);
}

Measurement m1383(const EvalContext& ctx) {
    using C = std::complex<double>;
    const int G = ctx.fast() ? 80 : 200;
    std::string why;
    for (double a : {0.25, 0.5, 0.75, 0.9, 1.0}) {
        const double formula = std::max(1.0, std::exp2(1.0 - a) * std::sin(a * kPi / 2.0));
        double sup = 0.0;
        auto ratio = [a](C z, C w) { return std::abs(std::pow(1.0 - z, a) - std::pow(1.0 - w, a)) / std::pow(std::abs(z - w), a); };
        // polar grid over the closed disk; each z is paired with its mirror
        // image and with the boundary point 1
        for (int i = 1; i <= G; ++i)
            for (int j = 1; j <= G; ++j) {
                const double r = static_cast<double>(i) / G, th = kPi * j / (G + 1.0);
                const C z = std::polar(r, th);
                sup = std::max({sup, ratio(z, std::conj(z)), ratio(z, C(1.0, 0.0))});
            }
        if (!(sup <= formula + 1e-9 && sup >= formula - 0.05)) {
            why = "grid sup " + std::to_string(sup) + " vs " + std::to_string(formula) + " at alpha " + std::to_string(a);
            break;
        }
    }
    return boolean(why.empty(), why);
}

// ---- extrema

Measurement m1442(const EvalContext& ctx) {
    // point on the positive octant of the unit sphere in spherical angles
    auto F = [](const std::vector<double>& v) {
        const double x = std::sin(v[0]) * std::cos(v[1]), y = std::sin(v[0]) * std::sin(v[1]), z = std::cos(v[0]);
        return 1.0 / x + 1.0 / y + 2.0 / z;
    };
    MinimizeOptions mo;
    mo.seed = ctx.seed;
    mo.starts = ctx.fast() ? 16 : 64;
    const double e = 1e-3;
    const MinimizeResult r = minimize_multistart(F, Box{{e, e}, {kPi / 2 - e, kPi / 2 - e}}, mo);
    Measurement m;
    m.computed = r.value;
    m.kernel_err = r.err;
    return m;
}

Measurement m4817(const EvalContext& ctx) {
    // a = e^u, b = e^v, c = 1/(ab)
    auto H = [](const std::vector<double>& v) {
        const double a = std::exp(v[0]), b = std::exp(v[1]), c = 1.0 / (a * b);
        auto t = [](double p, double q, double r) {
            return (std::pow(p, 7) + p * p * p + q * r) / (p + q * r + 1.0);
        };
        return t(a, b, c) + t(b, c, a) + t(c, a, b);
    };
    MinimizeOptions mo;
    mo.seed = ctx.seed;
    mo.starts = ctx.fast() ? 16 : 64;
    const MinimizeResult r = minimize_multistart(H, Box{{-1.5, -1.5}, {1.5, 1.5}}, mo);
    Measurement m;
    m.computed = r.value;
    m.kernel_err = r.err;
    m.holds = std::fabs(r.point[0]) < 1e-4 && std::fabs(r.point[1]) < 1e-4;
    if (!m.holds) m.note = "minimiser is not (1,1,1)";
    return m;
}

// ---- consistency

Measurement m1431(const EvalContext& ctx) {
    // inner alternating sum in k, outer terms of one sign decaying like n^{-7/2}
    auto inner = [](long n) {
        const double c = 2.0 * static_cast<double>(n) + 3.0;
        return sum_alternating(
                   [c](long k) {
                       const double q = 2.0 * static_cast<double>(k);
                       return 1.0 / ((q + 1.0) * (c + q) * (c + q));
                   },
                   0, 1e-17)
            .value;
    };
    const long N = ctx.budget(4000);
    std::vector<double> w(static_cast<std::size_t>(N + 2));
    w[0] = 1.0;  // (-1)^n C(-1/2, n) = C(2n, n)/4^n
    for (long n = 1; n <= N + 1; ++n) w[n] = w[n - 1] * (2.0 * n - 1.0) / (2.0 * n);
    NumericResult S = sum_series([&](long n) { return -w[static_cast<std::size_t>(n)] / (2.0 * n + 1.0) * inner(n); }, 0,
                                 TailStrategy::asymptotic_fit(3.5, N), ctx.tol(1e-12));
    NumericResult I = integrate([](double x) { return std::asin(x) * std::atan(x) * std::log(x); },
                                Interval::finite(0.0, 1.0).singular(true, true), ctx.quad(1e-14));
    Measurement m = from(S);
    m.expected = I.value;
    m.kernel_err = S.err + I.err;
    return m;
}

Measurement m4937(const EvalContext& ctx) {
    constexpr double a = 1.0, b = 0.7;
    auto f = [](double t) { return std::fabs(std::sin(kPi * t / a)); };
    auto f_over = [&](double t) { return f(t) / t; };
    const QuadOptions q = ctx.quad(1e-14);
    double inner_err = 0.0;
    auto row = [&](double y) {
        // kink of f where x + y crosses a
        std::vector<double> kink;
        if (a - y > 0.0 && a - y < a) kink.push_back(a - y);
        NumericResult r = integrate([&](double x) { return f_over(x + y); }, Interval::finite(0.0, a, kink), q);
        inner_err = std::max(inner_err, r.err);
        return r.value;
    };
    NumericResult L = integrate(row, Interval::finite(0.0, b), q);
    NumericResult R1 = integrate(f_over, Interval::finite(b, a + b, {a}), q);
    NumericResult R2 = integrate(f_over, Interval::finite(a, a + b), q);
    Measurement m;
    m.computed = L.value;
    m.expected = b * R1.value + a * R2.value;
    m.kernel_err = L.err + b * inner_err + b * R1.err + a * R2.err;
    return m;
}

}  // namespace

void register_misc(std::vector<Identity>& out) {
    const auto In = Category::Inequality, Ex = Category::Extremum, Co = Category::Consistency;
    const Expr one = rat(1);

    add(out, "mm-1947", In, one, 0, m1947, "sum_{k=0}^n |cos k| >= n/2, checked for n <= 10^5");
    add(out, "amm-10857", In, one, 0, m10857,
        "S_{2n-1}/C_{2n} < tanh x < S_{2n+1}/C_{2n} with C, S the Taylor sections of cosh, sinh; x = 0.1..3, n <= 20");
    add(out, "crux-4822", In, one, 0, m4822, "I = int_1^inf T_n(x)^{-2/n} dx satisfies 1/3 < I < 4^{1/n}/3, n <= 10");
    add(out, "amm-12490", In, c("pi") / rat(2) * (c("e") - rat(3)), 1e-10, m12490,
        "sum_n int_0^1 sin(2 pi n x)/n f(x) dx <= 0 for increasing f; for f = e^x it equals (pi/2)(e - 3)", {},
        "value fixed by the sawtooth series sum sin(2 pi n x)/n = pi (1/2 - x)");
    add(out, "elem-1453", In, one, 0, m1453, "(1 - 1/x)^{n-1} <= x/(x + n - 1) for x > 1, n <= 12");
    add(out, "elem-1383", In, one, 0, m1383,
        "sup over the unit disk of |(1-z)^a - (1-w)^a|/|z-w|^a is max{1, 2^{1-a} sin(a pi/2)}", {},
        "grid sup over z on a polar grid, paired with conj(z) and with 1");

    add(out, "elem-1442", Ex, pow(rat(2) + pow(rat(2), rat(2, 3)), rat(3, 2)), 1e-9, m1442,
        "min of 1/x + 1/y + 2/z on the positive part of the unit sphere is (2 + 2^{2/3})^{3/2}", {"randomized"});
    add(out, "crux-4817", Ex, rat(3), 1e-9, m4817,
        "H(a,b,c) = sum_cyc (a^7 + a^3 + bc)/(a + bc + 1) on abc = 1 has infimum 3, attained at (1,1,1)",
        {"randomized"});

    add(out, "elem-1431", Co, nullptr, 1e-10, m1431,
        "sum_{k,n>=0} (-1)^{k+n+1} C(-1/2,n)/((2n+1)(2k+1)(2n+2k+3)^2) = int_0^1 arcsin x arctan x log x dx");
    add(out, "crux-4937", Co, nullptr, 1e-10, m4937,
        "int_0^b int_0^a f(x+y)/(x+y) dx dy = b int_b^{a+b} f(t)/t dt + a int_a^{a+b} f(s)/s ds for a-periodic f; "
        "f(t) = |sin(pi t/a)|, a = 1, b = 0.7");
}

}  // namespace idv::detail
