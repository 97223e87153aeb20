#include "idv/quad.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "idv/kahan.hpp"

namespace idv {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTMax = 6.0;
constexpr int kMinLevel = 3;
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class PieceKind { Finite, RightInfinite, LeftInfinite };

struct Piece {
    PieceKind kind;
    double a, b;  // b unused for RightInfinite, a unused for LeftInfinite
};

// Sum of w(t) f(x(t)) over the abscissae of one level. `first` selects the
// level-0 grid (all integers) instead of the odd multiples of the step.
struct LevelSum {
    double sum = 0.0;
    double abs_sum = 0.0;
    long evals = 0;
};

void check_value(double v, double x) {
    if (!std::isfinite(v))
        throw EvaluationError("integrand not finite at x = " + std::to_string(x));
}

LevelSum eval_points(const EdgeIntegrand& f, bool raw, const Piece& p, int level) {
    LevelSum out;
    KahanSum s, sa;
    const double step = level == 0 ? 1.0 : std::ldexp(1.0, -level);
    const long kmax = static_cast<long>(kTMax / step);
    for (long k = -kmax; k <= kmax; ++k) {
        if (level > 0 && (k % 2 == 0)) continue;
        const double t = k * step;
        const double u = kHalfPi * std::sinh(t);
        double x, w, dl, dr;
        if (p.kind == PieceKind::Finite) {
            const double h = 0.5 * (p.b - p.a);
            const double q = std::exp(-2.0 * std::fabs(u));
            const double delta = h * 2.0 * q / (1.0 + q);
            if (delta == 0.0) continue;
            w = h * kHalfPi * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q));
            if (t >= 0) {
                x = p.b - delta;
                dr = delta;
                dl = (p.b - p.a) - delta;
            } else {
                x = p.a + delta;
                dl = delta;
                dr = (p.b - p.a) - delta;
            }
            if (raw && (x <= p.a || x >= p.b)) continue;
        } else {
            const double e = std::exp(u);
            if (e == 0.0 || !std::isfinite(e)) continue;
            w = kHalfPi * std::cosh(t) * e;
            if (p.kind == PieceKind::RightInfinite) {
                x = p.a + e;
                dl = e;
                dr = kInf;
                if (raw && x <= p.a) continue;
            } else {
                x = p.b - e;
                dr = e;
                dl = kInf;
                if (raw && x >= p.b) continue;
            }
        }
        if (w == 0.0) continue;
        const double fx = f(x, dl, dr);
        ++out.evals;
        check_value(fx, x);
        const double term = w * fx;
        if (!std::isfinite(term)) throw EvaluationError("weighted integrand overflow at x = " + std::to_string(x));
        s += term;
        sa += std::fabs(term);
    }
    out.sum = s.value() * step;
    out.abs_sum = sa.value() * step;
    return out;
}

NumericResult integrate_piece(const EdgeIntegrand& f, bool raw, const Piece& p, const QuadOptions& opts) {
    NumericResult r;
    r.converged = false;
    LevelSum l0 = eval_points(f, raw, p, 0);
    double S = l0.sum, A = l0.abs_sum;
    r.evaluations = l0.evals;
    r.value = S;
    r.err = kInf;
    for (int level = 1; level <= opts.max_level; ++level) {
        LevelSum ln = eval_points(f, raw, p, level);
        r.evaluations += ln.evals;
        const double Snew = 0.5 * S + ln.sum;
        A = 0.5 * A + ln.abs_sum;
        const double diff = std::fabs(Snew - S);
        S = Snew;
        r.value = S;
        r.err = std::max(diff, 4.0 * std::numeric_limits<double>::epsilon() * A);
        if (level >= kMinLevel && r.err <= opts.target_abs_tol) {
            r.converged = true;
            break;
        }
    }
    return r;
}

std::vector<Piece> make_pieces(const Interval& iv) {
    std::vector<Piece> pieces;
    const auto& sp = iv.split_points;
    for (std::size_t i = 1; i < sp.size(); ++i)
        if (!(sp[i - 1] < sp[i])) throw PreconditionError("split points must be strictly ascending");
    switch (iv.kind) {
    case Interval::Kind::Finite: {
        if (!(iv.a < iv.b)) throw PreconditionError("finite interval needs a < b");
        double left = iv.a;
        for (double s : sp) {
            if (!(s > iv.a && s < iv.b)) throw PreconditionError("split point outside interval");
            pieces.push_back({PieceKind::Finite, left, s});
            left = s;
        }
        pieces.push_back({PieceKind::Finite, left, iv.b});
        break;
    }
    case Interval::Kind::SemiInfinite: {
        double left = iv.a;
        for (double s : sp) {
            if (!(s > iv.a)) throw PreconditionError("split point must exceed the left end");
            pieces.push_back({PieceKind::Finite, left, s});
            left = s;
        }
        pieces.push_back({PieceKind::RightInfinite, left, kInf});
        break;
    }
    case Interval::Kind::RealLine: {
        std::vector<double> cuts = sp.empty() ? std::vector<double>{0.0} : sp;
        pieces.push_back({PieceKind::LeftInfinite, -kInf, cuts.front()});
        for (std::size_t i = 1; i < cuts.size(); ++i) pieces.push_back({PieceKind::Finite, cuts[i - 1], cuts[i]});
        pieces.push_back({PieceKind::RightInfinite, cuts.back(), kInf});
        break;
    }
    }
    return pieces;
}

NumericResult integrate_impl(const EdgeIntegrand& f, bool raw, const Interval& iv, const QuadOptions& opts) {
    if (!(opts.target_abs_tol > 0)) throw PreconditionError("target_abs_tol must be positive");
    if (opts.max_level < 3 || opts.max_level > 16) throw PreconditionError("max_level must lie in [3, 16]");
    const auto pieces = make_pieces(iv);
    QuadOptions sub = opts;
    sub.target_abs_tol = opts.target_abs_tol / static_cast<double>(pieces.size());
    NumericResult total;
    KahanSum v;
    for (const auto& p : pieces) {
        NumericResult r = integrate_piece(f, raw, p, sub);
        v += r.value;
        total.err += r.err;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
    }
    total.value = v.value();
    return total;
}

}  // namespace

Interval Interval::finite(double a, double b, std::vector<double> splits) {
    Interval iv;
    iv.kind = Kind::Finite;
    iv.a = a;
    iv.b = b;
    iv.split_points = std::move(splits);
    return iv;
}

Interval Interval::semi_infinite(double a, std::vector<double> splits) {
    Interval iv;
    iv.kind = Kind::SemiInfinite;
    iv.a = a;
    iv.b = kInf;
    iv.split_points = std::move(splits);
    return iv;
}

Interval Interval::real_line(std::vector<double> splits) {
    Interval iv;
    iv.kind = Kind::RealLine;
    iv.a = -kInf;
    iv.b = kInf;
    iv.split_points = std::move(splits);
    return iv;
}

NumericResult integrate(const Integrand& f, const Interval& iv, const QuadOptions& opts) {
    return integrate_impl([&f](double x, double, double) { return f(x); }, true, iv, opts);
}

NumericResult integrate_edge(const EdgeIntegrand& f, const Interval& iv, const QuadOptions& opts) {
    return integrate_impl(f, false, iv, opts);
}

std::pair<NumericResult, NumericResult> integrate_complex(const ComplexIntegrand& f, const Interval& iv,
                                                          const QuadOptions& opts) {
    auto re = integrate([&f](double x) { return f(x).real(); }, iv, opts);
    auto im = integrate([&f](double x) { return f(x).imag(); }, iv, opts);
    return {re, im};
}

}  // namespace idv
