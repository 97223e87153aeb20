#include "idv/seqsum.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "idv/kahan.hpp"

namespace idv {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double checked_term(const Term& term, long n) {
    const double t = term(n);
    if (!std::isfinite(t)) throw EvaluationError("series term not finite at n = " + std::to_string(n));
    return t;
}

// sum_{n > N} n^{-alpha} by Euler-Maclaurin at N; returns value and a bound
// on the first omitted correction.
std::pair<double, double> power_tail(double alpha, long N) {
    const double x = static_cast<double>(N);
    const double xa = std::pow(x, -alpha);
    const double t0 = x * xa / (alpha - 1.0);
    const double t1 = -0.5 * xa;
    const double t2 = alpha * xa / (12.0 * x);
    const double t3 = -alpha * (alpha + 1) * (alpha + 2) * xa / (720.0 * x * x * x);
    const double next = alpha * (alpha + 1) * (alpha + 2) * (alpha + 3) * (alpha + 4) * xa / (30240.0 * std::pow(x, 5));
    return {((t3 + t2) + t1) + t0, std::fabs(next)};
}

struct Partial {
    double sum = 0.0;
    double abs_sum = 0.0;
};

Partial direct_sum(const Term& term, long start, long N) {
    KahanSum s, a;
    for (long n = start; n <= N; ++n) {
        const double t = checked_term(term, n);
        s += t;
        a += std::fabs(t);
    }
    return {s.value(), a.value()};
}

}  // namespace

TailStrategy TailStrategy::geometric(double q, long max_terms) {
    if (!(q >= 0.0 && q < 1.0)) throw PreconditionError("geometric tail needs 0 <= q < 1");
    TailStrategy t;
    t.kind = Kind::GeometricRatio;
    t.q = q;
    t.N = max_terms;
    return t;
}

TailStrategy TailStrategy::integral(long N, std::function<double(double)> model) {
    TailStrategy t;
    t.kind = Kind::IntegralTail;
    t.N = N;
    t.model = std::move(model);
    return t;
}

TailStrategy TailStrategy::alternating(long terms) {
    TailStrategy t;
    t.kind = Kind::AlternatingAccel;
    t.N = terms;
    return t;
}

TailStrategy TailStrategy::asymptotic(double c, double alpha, long N) {
    if (!(alpha > 1.0)) throw PreconditionError("asymptotic tail needs alpha > 1");
    TailStrategy t;
    t.kind = Kind::AsymptoticModel;
    t.c = c;
    t.alpha = alpha;
    t.N = N;
    return t;
}

TailStrategy TailStrategy::asymptotic_fit(double alpha, long N) {
    return asymptotic(std::numeric_limits<double>::quiet_NaN(), alpha, N);
}

TailStrategy TailStrategy::truncate(long N) {
    TailStrategy t;
    t.kind = Kind::NoneTruncate;
    t.N = N;
    return t;
}

NumericResult cvz(const std::vector<double>& a) {
    NumericResult r;
    const int n = static_cast<int>(a.size());
    if (n == 0) return r;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d;
    KahanSum s;
    double abs_s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a[k];
        abs_s += std::fabs(c * a[k]);
        b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b / ((k + 0.5) * (k + 1.0));
    }
    r.value = s.value() / d;
    double amax = 0.0;
    for (double x : a) amax = std::max(amax, std::fabs(x));
    r.err = 2.0 * amax / d + 4.0 * kEps * abs_s / d;
    r.evaluations = n;
    return r;
}

NumericResult sum_alternating(const Term& magnitude, long start, double tol, int terms) {
    if (terms < 2) throw PreconditionError("sum_alternating needs at least 2 terms");
    std::vector<double> a(terms);
    for (int k = 0; k < terms; ++k) a[k] = checked_term(magnitude, start + k);
    const double sign = a[0] < 0 ? -1.0 : 1.0;
    constexpr int kBurnIn = 3;
    for (int k = 0; k < terms; ++k) {
        if (a[k] * sign < 0) throw PreconditionError("alternating magnitudes change sign at k = " + std::to_string(k));
        if (k > kBurnIn && std::fabs(a[k]) > std::fabs(a[k - 1]) * (1.0 + 1e-12))
            throw PreconditionError("alternating magnitudes not decreasing at k = " + std::to_string(k));
    }
    NumericResult r = cvz(a);
    r.converged = r.err <= tol;
    return r;
}

NumericResult sum_series(const Term& term, long start, const TailStrategy& tail, double tol) {
    using K = TailStrategy::Kind;
    NumericResult r;
    switch (tail.kind) {
    case K::NoneTruncate: {
        Partial p = direct_sum(term, start, tail.N);
        r.value = p.sum;
        r.err = 2.0 * kEps * p.abs_sum;
        r.evaluations = std::max(0L, tail.N - start + 1);
        break;
    }
    case K::GeometricRatio: {
        KahanSum s, a;
        double prev = 0.0, bound = std::numeric_limits<double>::infinity();
        bool ratio_ok = true;
        long n = start, count = 0;
        for (; count < tail.N; ++n, ++count) {
            const double t = checked_term(term, n);
            s += t;
            a += std::fabs(t);
            if (count > 4 && std::fabs(t) > tail.q * std::fabs(prev) * (1.0 + 1e-9) + 1e-300) ratio_ok = false;
            prev = t;
            bound = std::fabs(t) * tail.q / (1.0 - tail.q);
            if (count > 4 && bound <= 1e-3 * tol) break;
        }
        r.value = s.value();
        r.err = bound + 2.0 * kEps * a.value();
        r.evaluations = count + 1;
        if (!ratio_ok) r.err = std::max(r.err, std::fabs(prev) * 1e3);
        break;
    }
    case K::AlternatingAccel: {
        // terms carry their own signs; accelerate a_k = (-1)^k term(start+k)
        std::vector<double> a(static_cast<std::size_t>(tail.N > 0 ? tail.N : 40));
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double t = checked_term(term, start + static_cast<long>(k));
            a[k] = (k % 2 == 0) ? t : -t;
        }
        r = cvz(a);
        break;
    }
    case K::AsymptoticModel: {
        if (tail.N < start + 2) throw PreconditionError("asymptotic tail needs N >= start + 2");
        Partial p = direct_sum(term, start, tail.N);
        const double alpha = tail.alpha;
        const double tN = checked_term(term, tail.N);
        const double cN = tN * std::pow(static_cast<double>(tail.N), alpha);
        double c = tail.c, mismatch;
        if (std::isnan(c)) {
            const long half = std::max(start, tail.N / 2);
            const double ch = checked_term(term, half) * std::pow(static_cast<double>(half), alpha);
            c = cN;
            mismatch = ch != 0.0 ? std::fabs(cN / ch - 1.0) : 1.0;
        } else {
            mismatch = c != 0.0 ? std::fabs(cN / c - 1.0) : (cN == 0.0 ? 0.0 : 1.0);
        }
        auto [zt, zerr] = power_tail(alpha, tail.N);
        const double T = c * zt;
        KahanSum s(p.sum);
        s += T;
        r.value = s.value();
        r.err = std::fabs(T) * mismatch + std::fabs(c) * zerr + 2.0 * kEps * (p.abs_sum + std::fabs(T));
        r.evaluations = tail.N - start + 2;
        break;
    }
    case K::IntegralTail: {
        if (!tail.model) throw PreconditionError("integral tail needs a model");
        Partial p = direct_sum(term, start, tail.N);
        const double x0 = static_cast<double>(tail.N) + 0.5;
        QuadOptions qo;
        qo.target_abs_tol = std::max(1e-3 * tol, 1e-16);
        NumericResult I = integrate(tail.model, Interval::semi_infinite(x0), qo);
        const double tN = checked_term(term, tail.N);
        const double gN = tail.model(static_cast<double>(tail.N));
        const double mismatch = gN != 0.0 ? std::fabs(tN / gN - 1.0) : (tN == 0.0 ? 0.0 : 1.0);
        // midpoint Euler-Maclaurin: sum_{n>N} g(n) = int_{x0}^inf g - g'(x0)/24 + 7 g'''(x0)/5760 - ...
        // g' by a central difference; what is left is bounded through g'''
        const double gm1 = tail.model(x0 - 1.0), gm = tail.model(x0 - 0.5);
        const double gp = tail.model(x0 + 0.5), gp1 = tail.model(x0 + 1.0);
        const double d1 = gp - gm;
        const double d3 = std::fabs(gp1 - 2.0 * gp + 2.0 * gm - gm1) * 4.0;
        KahanSum s(p.sum);
        s += I.value;
        s += d1 / 24.0;
        r.value = s.value();
        r.err = std::fabs(I.value) * mismatch + d3 * (1.0 / 144.0 + 7.0 / 5760.0) + I.err +
                2.0 * kEps * (p.abs_sum + std::fabs(I.value));
        r.evaluations = tail.N - start + 1 + I.evaluations;
        break;
    }
    }
    r.converged = r.err <= tol;
    return r;
}

NumericResult sum_double(const DoubleTerm& term, const DoubleTail& tail, double tol) {
    if (!tail.row) throw PreconditionError("sum_double needs a row tail");
    double row_err = 0.0;
    long evals = 0;
    Term row_sum = [&](long m) {
        NumericResult r = sum_series([&](long n) { return term(m, n); }, 1, tail.row(m), tol);
        row_err += r.err;
        evals += r.evaluations;
        return r.value;
    };
    NumericResult outer = sum_series(row_sum, 1, tail.outer, tol);
    outer.err += row_err;
    outer.evaluations = evals;
    outer.converged = outer.err <= tol;
    return outer;
}

NumericResult product_infinite_log(const Term& log_factor, long start, const TailStrategy& tail, double tol) {
    if (tail.kind == TailStrategy::Kind::NoneTruncate && tail.N < start) return NumericResult{1.0, 0.0, 0, true};
    NumericResult s = sum_series(log_factor, start, tail, tol);
    NumericResult r;
    r.value = std::exp(s.value);
    r.err = r.value * std::expm1(s.err) + 2.0 * kEps * r.value;
    r.evaluations = s.evaluations;
    r.converged = r.err <= tol;
    return r;
}

NumericResult product_infinite(const Term& factor, long start, const TailStrategy& tail, double tol) {
    return product_infinite_log(
        [&factor](long n) {
            const double f = factor(n);
            if (!(f > 0.0)) throw DomainError("product factor not positive at n = " + std::to_string(n));
            return std::log(f);
        },
        start, tail, tol);
}

namespace {

NumericResult richardson(const std::vector<double>& s, const std::vector<double>& exps) {
    const int K = static_cast<int>(s.size()) - 1;
    const int m = std::min<int>(K, exps.empty() ? K : static_cast<int>(exps.size()));
    std::vector<std::vector<double>> T(K + 1, std::vector<double>(m + 1));
    for (int k = 0; k <= K; ++k) {
        T[k][0] = s[k];
        for (int j = 1; j <= std::min(k, m); ++j) {
            const double p = exps.empty() ? j : exps[j - 1];
            const double f = std::pow(2.0, p) - 1.0;
            T[k][j] = T[k][j - 1] + (T[k][j - 1] - T[k - 1][j - 1]) / f;
        }
    }
    NumericResult r;
    r.value = T[K][m];
    r.err = std::fabs(T[K][m] - T[K - 1][m - 1]);
    return r;
}

NumericResult wynn(const std::vector<double>& s) {
    // epsilon table, column by column; even columns hold the estimates
    std::vector<double> prev(s.size() + 1, 0.0), cur(s.begin(), s.end());
    std::vector<double> estimates;
    for (int k = 0;; ++k) {
        if (k % 2 == 0) estimates.push_back(cur.back());
        if (cur.size() < 2) break;
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double diff = cur[i + 1] - cur[i];
            if (diff == 0.0) {
                NumericResult r;
                r.value = (k % 2 == 0) ? cur[i + 1] : prev[i + 1];
                r.err = 0.0;
                return r;
            }
            next[i] = prev[i + 1] + 1.0 / diff;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    NumericResult r;
    r.value = estimates.back();
    r.err = estimates.size() > 1 ? std::fabs(estimates.back() - estimates[estimates.size() - 2])
                                 : std::fabs(s.back() - s[s.size() - 2]);
    return r;
}

NumericResult aitken(std::vector<double> s) {
    std::vector<double> finals{s.back()};
    while (s.size() >= 3) {
        std::vector<double> t(s.size() - 2);
        for (std::size_t i = 0; i + 2 < s.size(); ++i) {
            const double d1 = s[i + 2] - s[i + 1];
            const double d2 = d1 - (s[i + 1] - s[i]);
            t[i] = d2 == 0.0 ? s[i + 2] : s[i + 2] - d1 * d1 / d2;
        }
        s = std::move(t);
        finals.push_back(s.back());
    }
    NumericResult r;
    r.value = finals.back();
    r.err = std::fabs(finals.back() - finals[finals.size() - 2]);
    return r;
}

double basis_fit(const std::vector<double>& s, const std::vector<double>& n, int first, int count,
                 const std::vector<std::function<double(double)>>& basis) {
    Eigen::MatrixXd A(count, count);
    Eigen::VectorXd y(count);
    for (int i = 0; i < count; ++i) {
        A(i, 0) = 1.0;
        for (int j = 1; j < count; ++j) A(i, j) = basis[j - 1](n[first + i]);
        y(i) = s[first + i];
    }
    Eigen::VectorXd x = A.colPivHouseholderQr().solve(y);
    return x(0);
}

}  // namespace

NumericResult limit_from_samples(const std::vector<double>& s, const LimitOptions& opts) {
    if (s.size() < 3) throw PreconditionError("limit extrapolation needs at least 3 samples");
    for (double v : s)
        if (!std::isfinite(v)) throw EvaluationError("non-finite sequence sample");
    NumericResult r;
    if (!opts.basis.empty()) {
        const int K = static_cast<int>(s.size()) - 1;
        const int m = static_cast<int>(opts.basis.size());
        if (K < m + 1) throw PreconditionError("basis fit needs K >= basis size + 1");
        std::vector<double> n(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) n[k] = opts.n0 * std::ldexp(1.0, static_cast<int>(k));
        const double L1 = basis_fit(s, n, K - m, m + 1, opts.basis);
        const double L0 = basis_fit(s, n, K - m - 1, m + 1, opts.basis);
        r.value = L1;
        r.err = std::fabs(L1 - L0);
    } else {
        switch (opts.method) {
        case LimitMethod::Richardson: r = richardson(s, opts.exponents); break;
        case LimitMethod::WynnEpsilon: r = wynn(s); break;
        case LimitMethod::Aitken: r = aitken(s); break;
        }
    }
    if (!std::isfinite(r.value)) throw NonConvergence("extrapolation diverged");
    r.evaluations = static_cast<long>(s.size());
    r.converged = true;
    return r;
}

NumericResult limit_extrapolate(const std::function<double(int)>& seq, const LimitOptions& opts) {
    if (opts.K < 2) throw PreconditionError("limit extrapolation needs K >= 2");
    std::vector<double> s(opts.K + 1);
    for (int k = 0; k <= opts.K; ++k) s[k] = seq(k);
    return limit_from_samples(s, opts);
}

NumericResult integrate_alternating_panels(const Integrand& f, double a, double panel, const QuadOptions& opts,
                                           int panels) {
    if (!(panel > 0)) throw PreconditionError("panel length must be positive");
    std::vector<double> alt(panels);
    double qerr = 0.0;
    long evals = 0;
    QuadOptions po = opts;
    po.target_abs_tol = opts.target_abs_tol / panels;
    for (int k = 0; k < panels; ++k) {
        NumericResult p = integrate(f, Interval::finite(a + k * panel, a + (k + 1) * panel), po);
        alt[k] = (k % 2 == 0) ? p.value : -p.value;
        qerr += p.err;
        evals += p.evaluations;
    }
    NumericResult full = cvz(alt);
    const int fewer = std::max(2, (3 * panels) / 4);
    NumericResult part = cvz(std::vector<double>(alt.begin(), alt.begin() + fewer));
    NumericResult r;
    r.value = full.value;
    r.err = full.err + std::fabs(full.value - part.value) + qerr;
    r.evaluations = evals;
    r.converged = r.err <= opts.target_abs_tol;
    return r;
}

}  // namespace idv
