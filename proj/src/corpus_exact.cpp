#include <random>
#include <sstream>

#include "corpus_internal.hpp"
#include "idv/exact.hpp"
#include "idv/seqsum.hpp"

namespace idv::detail {

namespace {

using namespace cf;

// Deterministic small rationals from a seeded engine; only raw engine output
// is used so the sequence does not depend on the standard library.
class RatGen {
public:
    explicit RatGen(std::uint64_t seed) : eng_(seed) {}
    long integer(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rational rational(long span, long max_den) { return Rational(integer(-span, span), integer(1, max_den)); }
    Rational nonzero(long span, long max_den) {
        Rational r;
        do r = rational(span, max_den);
        while (r == 0);
        return r;
    }

private:
    std::mt19937_64 eng_;
};

std::string show(const std::vector<Solution>& v) {
    std::ostringstream o;
    o << "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        o << (i ? ", " : "") << "(";
        for (std::size_t j = 0; j < v[i].size(); ++j) o << (j ? "," : "") << v[i][j];
        o << ")";
    }
    o << "}";
    return o.str();
}

Measurement search_is(std::string_view kind, long bound, const std::vector<Solution>& want) {
    const auto got = search_diophantine(kind, bound);
    return boolean(got == want, got == want ? "" : "found " + show(got));
}

Measurement suite_range(std::string_view name, long lo, long hi) {
    for (long n = lo; n <= hi; ++n) {
        SuiteParams p;
        p.n = n;
        if (!binomial_identity_suite(name, p)) return boolean(false, "fails at n = " + std::to_string(n));
    }
    return boolean(true);
}

Measurement m12535(const EvalContext& ctx) {
    RatGen g(ctx.seed);
    const int trials = ctx.fast() ? 40 : 200;
    for (int t = 0; t < trials; ++t) {
        const int n = static_cast<int>(g.integer(1, 8));
        // random polynomial of degree <= n
        const int d = static_cast<int>(g.integer(0, n));
        std::vector<Rational> c(static_cast<std::size_t>(d + 1));
        for (auto& x : c) x = g.rational(20, 9);
        if (c.back() == 0) c.back() = 1;
        const Poly p(c);
        Rational want = 0;
        if (d == n) {
            want = Rational(factorial(n)) * c.back();
            if (n % 2) want = -want;
        }
        if (euler_finite_difference(p, n) != want)
            return boolean(false, "finite difference wrong for a degree " + std::to_string(d) + " polynomial");

        // p(k) = C(n + k x, n) = prod_{i=1}^n (k x + i)/i, a polynomial in k of degree n
        const Rational x = g.nonzero(6, 5);
        Poly q({Rational(1, factorial(n))});
        for (int i = 1; i <= n; ++i) q = q * Poly({Rational(i), x});
        Rational xn = 1;
        for (int i = 0; i < n; ++i) xn *= -x;
        if (euler_finite_difference(q, n) != xn) return boolean(false, "binomial family fails");
    }
    return boolean(true);
}

Measurement m1140b(const EvalContext& ctx) {
    // S(a,b) = Gamma(a+b)/(Gamma(a)Gamma(b)) sum_{k>=0} (-1)^k C(b-1,k)/(a+k)
    const double a = 1.5, b = 2.5, alpha = b - 1.0;
    const long N = ctx.budget(20000);
    std::vector<double> terms;
    double binom = 1.0;
    for (long k = 0; k <= N + 1; ++k) {
        terms.push_back(((k % 2) ? -binom : binom) / (a + static_cast<double>(k)));
        binom *= (alpha - static_cast<double>(k)) / static_cast<double>(k + 1);
    }
    // (-1)^k C(alpha,k) ~ k^{-alpha-1}/Gamma(-alpha) fixes the tail's shape
    NumericResult r = sum_series([&](long k) { return terms[static_cast<std::size_t>(k)]; }, 0,
                                 TailStrategy::asymptotic_fit(alpha + 2.0, N), ctx.tol(1e-13));
    const double pre = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b));
    Measurement m;
    m.computed = pre * r.value;
    m.kernel_err = pre * r.err;
    return m;
}

Measurement m10697(const EvalContext& ctx) {
    RatGen g(ctx.seed ^ 0x10697);
    for (int n = 1; n <= 6; ++n) {
        std::vector<Rational> pts;
        for (int i = 1; i <= n; ++i) pts.push_back(Rational(i));
        if (!lagrange_reciprocal_identity(pts)) return boolean(false, "fails on 1..n");
        for (int t = 0; t < (ctx.fast() ? 5 : 25); ++t) {
            std::vector<Rational> z;
            while (static_cast<int>(z.size()) < n) {
                const Rational r = g.nonzero(12, 7);
                if (std::find(z.begin(), z.end(), r) == z.end()) z.push_back(r);
            }
            if (!lagrange_reciprocal_identity(z)) return boolean(false, "fails on random points");
        }
    }
    return boolean(true);
}

Measurement m11070(const EvalContext& ctx) {
    static const long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (const auto& [k, c] : mo_coefficients(n)) total += c;
        // with f = g = exp every product of derivatives is 1, leaving B_n
        if (total != bell[n]) return boolean(false, "coefficients do not sum to the Bell number");
    }
    RatGen g(ctx.seed ^ 0x11070);
    for (int t = 0; t < (ctx.fast() ? 6 : 30); ++t) {
        auto poly = [&](int deg) {
            std::vector<Rational> c;
            for (int i = 0; i <= deg; ++i) c.push_back(Rational(g.integer(-4, 4)));
            c.back() = g.integer(1, 3);
            return Poly(c);
        };
        const Poly f = poly(static_cast<int>(g.integer(1, 5))), h = poly(static_cast<int>(g.integer(1, 4)));
        const Rational x = g.rational(5, 4);
        for (int n = 1; n <= 6; ++n)
            if (!compose_derivative_check(f, h, n, x)) return boolean(false, "composition derivative mismatch");
    }
    return boolean(true);
}

Measurement m4854(const EvalContext&) {
    for (long n = 1; n <= 12; ++n)
        for (long r = 1; r <= n; ++r)
            for (long s = 1; s <= n; ++s) {
                SuiteParams p;
                p.n = n;
                p.r = r;
                p.s = s;
                if (!binomial_identity_suite("trig_sum_4854", p)) return boolean(false, "fails at n = " + std::to_string(n));
            }
    return boolean(true);
}

Measurement trig_points(std::string_view name, const std::vector<double>& xs) {
    for (long n = 1; n <= 12; ++n)
        for (double x : xs) {
            SuiteParams p;
            p.n = n;
            p.x = x;
            if (!binomial_identity_suite(name, p)) return boolean(false, "fails at n = " + std::to_string(n));
        }
    return boolean(true);
}

Measurement m2184(const EvalContext& ctx) {
    RatGen g(ctx.seed ^ 0x2184);
    for (int t = 0; t < 20; ++t) {
        SuiteParams p;
        p.a = g.nonzero(9, 7);
        p.b = g.rational(9, 7);
        if (!binomial_identity_suite("discriminant_2184", p)) return boolean(false, "discriminant forms disagree");
    }
    return boolean(true);
}

Measurement m4850(const EvalContext&) {
    auto zero = [](const Matrix& m) {
        for (const auto& row : m)
            for (int v : row)
                if (v) return false;
        return true;
    };
    for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}})
        if (!zero(gl_sum(q, n))) return boolean(false, "nonzero sum for n >= 2");
    const bool ones = gl_sum(2, 1) == Matrix{{1}} && gl_sum(3, 1) == Matrix{{0}} && gl_sum(5, 1) == Matrix{{0}};
    return boolean(ones, ones ? "" : "wrong 1x1 sums");
}

Measurement m1437(const EvalContext&) {
    for (int k = 1; k <= 60; ++k) {
        const Rational a = gregory_coefficient(k);
        if (!(a * 3 * k * k >= 1 && a * k <= 1)) return boolean(false, "bound fails at k = " + std::to_string(k));
    }
    return boolean(gregory_coefficient(1) == Rational(1, 2) && gregory_coefficient(2) == Rational(1, 12));
}

}  // namespace

void register_exact(std::vector<Identity>& out) {
    const auto E = Category::Exact;
    const Expr one = rat(1);

    add(out, "amm-12415", E, one, 0, [](const EvalContext&) { return suite_range("dbl_binom_12415", 0, 8); },
        "S_n = sum_{j=0}^{2n} sum_{k=floor(j/2)}^{j} C(2n+2, 2k+1) C(n+1, 2k-j) = 2^{3n+1}, n <= 8");
    add(out, "amm-12535", E, one, 0, m12535,
        "sum_{k=0}^n (-1)^k C(n,k) p(k) is 0 for deg p < n and (-1)^n n! a_n for deg p = n; with p(k) = C(n+kx, n) "
        "it equals (-1)^n x^n",
        {"randomized"});
    add(out, "crux-4951", E, one, 0, [](const EvalContext&) { return suite_range("alt_recip_4951", 1, 30); },
        "sum_{k=1}^n (-1)^{k-1} C(n,k-1)/k = sum_{k=1}^n (-1)^{k-1}/(k C(n,k)) = (1 + (-1)^{n+1})/(n+1), n <= 30");
    add(out, "quicky-1140a", E, one, 0,
        [](const EvalContext&) {
            for (long n = 0; n <= 12; ++n)
                for (long m = 0; m <= 12; ++m) {
                    SuiteParams p;
                    p.n = n;
                    p.m = m;
                    if (!binomial_identity_suite("quicky_1140a", p)) return boolean(false);
                }
            return boolean(true);
        },
        "B(n,m) = sum_{k=0}^n (-1)^k C(m+k, k) C(m+n+1, n-k) = 1 for n, m <= 12");
    add(out, "quicky-1140b", E, one, 1e-10, m1140b,
        "S(a,b) = Gamma(a+b)/(Gamma(a) Gamma(b)) sum_{k>=0} (-1)^k C(b-1,k)/(a+k) = 1 at (a,b) = (3/2, 5/2)", {},
        "non-integer b makes the sum infinite, so this member is numeric");
    add(out, "elem-1449", E, one, 0, [](const EvalContext&) { return suite_range("elem_1449", 1, 15); },
        "A = sum_{k=3}^{2n+1} (-1)^{k-1} C(2n+1,k) C(k-1,2) 2^{k-3} = n^2, n <= 15");
    add(out, "crux-4900", E, one, 0,
        [](const EvalContext&) {
            SuiteParams p;
            p.n = 25;
            return boolean(binomial_identity_suite("harmonic_ineq_4900", p));
        },
        "H_m + H_n + H_p + H_q <= 3 + H_{mnpq} for all m, n, p, q <= 25", {"slow"});
    add(out, "amm-10697", E, one, 0, m10697,
        "sum_k 1/z_k prod_{j != k} 1/(z_k - z_j) = (-1)^{n-1}/prod_j z_j, n <= 6", {"randomized"});
    add(out, "amm-11070", E, one, 0, m11070,
        "(f o g)^{(n)} = sum_j f^{(j)}(g) sum_{|k| = n} C_k^n g^{(k)}, C_k^n = C(n; k)/prod_i A_k(i)!, checked for n <= 6",
        {"randomized"});
    add(out, "crux-4854", E, one, 0, m4854,
        "sum_{j=1}^n (sin(j r pi/(n+1)) + sin(j s pi/(n+1)))^2 = n+1 for r != s and 2(n+1) for r = s");
    add(out, "cmj-1296", E, one, 0,
        [](const EvalContext&) { return trig_points("cheb_partfrac_1296", {0.1, 0.37, 1.0, 2.2}); },
        "n/cos(nt) = sum_{k=1}^n (-1)^{k+1} sin((2k-1) pi/(2n))/(cos t - cos((2k-1) pi/(2n)))");
    add(out, "amm-12436", E, one, 0,
        [](const EvalContext&) { return trig_points("cheb_product_12436", {-0.3, 0.0, 0.5, 2.0}); },
        "prod_{k=1}^n (x + sin^2(k pi/(2n))) = 2^{-2n+2} (x+1) U_{n-1}(2x+1)");
    add(out, "mm-2184", E, one, 0, m2184,
        "the discriminant of a z^3 + b z^2 + (a-1) z + b equals -4[(b^2 + a^2 + 5a/2 - 1/8)^2 - 8(a + 1/8)^3]",
        {"randomized"});
    add(out, "mm-2117", E, one, 0,
        [](const EvalContext& ctx) { return search_is("factorial_power_2117", ctx.fast() ? 20 : 60, {{1, 1}, {1, 2}, {2, 4}}); },
        "(m+1)^n = m! + 1 only for (n,m) = (1,1), (1,2), (2,4)");
    add(out, "crux-4803", E, one, 0,
        [](const EvalContext& ctx) { return search_is("pow23_square_4803", ctx.fast() ? 12 : 40, {{2, 1, 2}}); },
        "2^{2a} + 3^{2b} = (2c+1)^2 only for (a,b,c) = (2,1,2)");
    add(out, "gaz-108E", E, one, 0,
        [](const EvalContext& ctx) { return search_is("quintuplet_108E", ctx.fast() ? 100000 : 1000000, {{5}}); },
        "n, n+2, n+6, n+8, n+14 are all prime only for n = 5", {"primes"});
    add(out, "crux-4855", E, one, 0,
        [](const EvalContext& ctx) {
            const long B = ctx.fast() ? 20 : 40;
            std::vector<Solution> want;
            for (long a = 1; a <= B; ++a)
                for (long b = 1; b <= B; ++b)
                    if (a == 1 || b == 1 || a == b || (a == 2 && b == 3) || (a == 3 && b == 2)) want.push_back({a, b});
            return search_is("pair_4855", B, want);
        },
        "a^b - b^a = a - b exactly for (1,v), (u,1), (t,t), (2,3), (3,2)");
    add(out, "crux-4811", E, one, 0,
        [](const EvalContext& ctx) { return search_is("cube_square_4811", ctx.fast() ? 100000 : 1000000, {{2}}); },
        "sqrt(n^3 + 1) + sqrt(n + 2) is an integer only for n = 2");
    add(out, "elem-1447", E, one, 0,
        [](const EvalContext&) { return search_is("norm_1447", 40, {{0, 0}}); },
        "(20 + 24 sqrt2)^n = (24 + 20 sqrt2)^m only for n = m = 0");
    add(out, "crux-4850", E, one, 0, m4850,
        "the sum of all invertible n x n matrices over a finite field is zero for n >= 2; for n = 1 it is 1 over F_2 and "
        "0 otherwise");
    add(out, "elem-1437", E, one, 0, m1437,
        "a_k = (-1)^{k+1} int_0^1 C(s,k) ds satisfies 1/(3k^2) <= a_k <= 1/k, checked for k <= 60", {"gregory"});
}

}  // namespace idv::detail
