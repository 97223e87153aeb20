#include "idv/solve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "idv/kahan.hpp"

namespace idv {

Bracket make_bracket(const RealFn& f, double a, double b) {
    if (!(a < b)) throw PreconditionError("bracket needs a < b");
    const double fa = f(a), fb = f(b);
    if (!(fa * fb < 0)) throw PreconditionError("no sign change on bracket");
    return {a, b};
}

double root_bracketed(const RealFn& f, const Bracket& br, double tol) {
    double a = br.a, b = br.b;
    double fa = f(a), fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb)) throw EvaluationError("function not finite at bracket end");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0) throw PreconditionError("no sign change on bracket");
    double c = a, fc = fa, d = b - a, e = d;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 300; ++iter) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 0.5 * std::max(tol, 1e-14 * std::fabs(b)) + eps * std::fabs(b);
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol1 ? d : std::copysign(tol1, xm);
        fb = f(b);
        if (!std::isfinite(fb)) throw EvaluationError("function not finite inside bracket");
    }
    throw NonConvergence("root_bracketed: iteration limit");
}

std::vector<double> enumerate_roots(const RealFn& f, const std::function<Bracket(long)>& bracket_gen, long count,
                                    double tol) {
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(std::max(0L, count)));
    for (long n = 0; n < count; ++n) {
        Bracket br = bracket_gen(n);
        if (!(f(br.a) * f(br.b) < 0))
            throw PreconditionError("bracket " + std::to_string(n) + " has no sign change");
        roots.push_back(root_bracketed(f, br, tol));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

NumericResult root_power_sum(const std::vector<double>& roots, int exponent, const TailModel& tail, long tail_start) {
    if (exponent < 2) throw PreconditionError("root_power_sum needs exponent >= 2");
    const double p = exponent;
    NumericResult r;
    KahanSum s;
    double err = 0.0;
    // smallest contributions first
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        if (!(*it > 0)) throw PreconditionError("roots must be positive");
        s += std::pow(*it, -p);
        err += p * std::pow(*it, -p) * 1e-14;
    }
    KahanSum t;
    double dev = 0.0;
    long n = tail_start;
    double term = 0.0;
    constexpr long kMaxTail = 2000000;
    for (; n < tail_start + kMaxTail; ++n) {
        const double sn = tail.asymptote(n);
        term = std::pow(sn, -p);
        t += term;
        if (tail.deviation_bound) dev += p * tail.deviation_bound(n) * std::pow(sn, -p - 1.0);
        if (term < 1e-22 * std::max(1e-300, t.value()) && n > tail_start + 100) break;
    }
    // remainder beyond the last summed index, for an asymptote growing at least linearly
    const double rem = term * static_cast<double>(n - tail_start + 1) / (p - 1.0);
    s += t.value();
    s += rem;
    r.value = s.value();
    r.err = err + dev + rem + 4.0 * std::numeric_limits<double>::epsilon() * r.value;
    r.evaluations = static_cast<long>(roots.size()) + (n - tail_start);
    return r;
}

std::vector<std::vector<double>> scrambled_halton(int count, int dim, std::uint64_t seed) {
    static const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (dim < 1 || dim > 12) throw PreconditionError("scrambled_halton supports 1..12 dimensions");
    std::mt19937_64 eng(seed);
    std::vector<std::vector<int>> perms(dim);
    std::vector<double> shift(dim);
    for (int d = 0; d < dim; ++d) {
        const int base = kPrimes[d];
        perms[d].resize(base);
        std::iota(perms[d].begin(), perms[d].end(), 0);
        for (int i = base - 1; i > 1; --i) {
            const int j = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(i));
            std::swap(perms[d][i], perms[d][j]);
        }
        shift[d] = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    }
    std::vector<std::vector<double>> pts(count, std::vector<double>(dim));
    for (int i = 0; i < count; ++i) {
        for (int d = 0; d < dim; ++d) {
            const int base = kPrimes[d];
            double f = 1.0, x = 0.0;
            for (long k = i + 1; k > 0; k /= base) {
                f /= base;
                x += f * perms[d][k % base];
            }
            x += shift[d];
            pts[i][d] = x - std::floor(x);
        }
    }
    return pts;
}

namespace {

struct Simplex {
    std::vector<std::vector<double>> x;
    std::vector<double> f;
};

std::vector<double> clamp(std::vector<double> p, const Box& box) {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::clamp(p[i], box.lo[i], box.hi[i]);
    return p;
}

// One Nelder-Mead descent. Returns the best vertex, its value and the final
// spread of simplex values.
std::tuple<std::vector<double>, double, double> nelder_mead(const Objective& g, std::vector<double> x0,
                                                            const Box& box, double rel_step, double tol) {
    const std::size_t n = x0.size();
    Simplex s;
    s.x.push_back(x0);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = x0;
        const double h = rel_step * (box.hi[i] - box.lo[i]);
        v[i] = (v[i] + h <= box.hi[i]) ? v[i] + h : v[i] - h;
        s.x.push_back(clamp(v, box));
    }
    for (auto& v : s.x) s.f.push_back(g(v));
    std::vector<std::size_t> idx(n + 1);
    double spread = 0.0;
    for (int iter = 0; iter < 4000 * static_cast<int>(n); ++iter) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s.f[a] < s.f[b]; });
        const std::size_t best = idx.front(), worst = idx.back(), second = idx[n - 1];
        spread = s.f[worst] - s.f[best];
        double size = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j) size = std::max(size, std::fabs(s.x[i][j] - s.x[best][j]));
        if (spread <= tol * (1.0 + std::fabs(s.f[best])) && size <= 1e-9) break;
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i)
            if (i != worst)
                for (std::size_t j = 0; j < n; ++j) centroid[j] += s.x[i][j] / static_cast<double>(n);
        auto along = [&](double t) {
            std::vector<double> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = centroid[j] + t * (s.x[worst][j] - centroid[j]);
            return clamp(v, box);
        };
        auto xr = along(-1.0);
        const double fr = g(xr);
        if (fr < s.f[best]) {
            auto xe = along(-2.0);
            const double fe = g(xe);
            if (fe < fr) {
                s.x[worst] = xe;
                s.f[worst] = fe;
            } else {
                s.x[worst] = xr;
                s.f[worst] = fr;
            }
        } else if (fr < s.f[second]) {
            s.x[worst] = xr;
            s.f[worst] = fr;
        } else {
            const bool outside = fr < s.f[worst];
            auto xc = along(outside ? -0.5 : 0.5);
            const double fc = g(xc);
            if (fc < (outside ? fr : s.f[worst])) {
                s.x[worst] = xc;
                s.f[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < n; ++j) s.x[i][j] = s.x[best][j] + 0.5 * (s.x[i][j] - s.x[best][j]);
                    s.f[i] = g(s.x[i]);
                }
            }
        }
    }
    const auto it = std::min_element(s.f.begin(), s.f.end());
    const std::size_t b = static_cast<std::size_t>(it - s.f.begin());
    return {s.x[b], *it, spread};
}

}  // namespace

MinimizeResult minimize_multistart(const Objective& objective, const Box& domain, const MinimizeOptions& opts) {
    const std::size_t dim = domain.lo.size();
    if (dim == 0 || domain.hi.size() != dim) throw PreconditionError("box dimensions mismatch");
    for (std::size_t i = 0; i < dim; ++i)
        if (!(domain.lo[i] < domain.hi[i])) throw PreconditionError("empty box");
    Objective g = objective;
    if (opts.constraint) {
        g = [&objective, &opts](const std::vector<double>& x) {
            const double c = opts.constraint(x);
            return objective(x) + opts.penalty * c * c;
        };
    }
    auto starts = scrambled_halton(opts.starts, static_cast<int>(dim), opts.seed);
    MinimizeResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (const auto& u : starts) {
        std::vector<double> x0(dim);
        for (std::size_t i = 0; i < dim; ++i) x0[i] = domain.lo[i] + u[i] * (domain.hi[i] - domain.lo[i]);
        if (!std::isfinite(g(x0))) continue;
        ++best.feasible_starts;
        auto [x1, f1, s1] = nelder_mead(g, x0, domain, 0.05, opts.tol);
        // restart from the local optimum with a small simplex
        auto [x2, f2, s2] = nelder_mead(g, x1, domain, 1e-4, opts.tol);
        (void)s1;
        if (f2 < best.value) {
            best.value = f2;
            best.point = x2;
            best.err = s2;
        }
    }
    if (best.feasible_starts == 0) throw PreconditionError("no feasible start point");
    return best;
}

}  // namespace idv
