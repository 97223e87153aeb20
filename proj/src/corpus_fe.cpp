#include <complex>

#include "corpus_internal.hpp"

namespace idv::detail {

namespace {

using namespace cf;
using Params = std::vector<double>;
using Pt = std::vector<double>;

// Every residual takes the candidate through its parameters; the last
// parameter of a family member selects the candidate's shape, so the
// negative control can reuse the same residual.
void fe(std::vector<Identity>& out, std::string id, std::string quote, FeResidual r, std::vector<Params> family,
        Params control, std::vector<Pt> grid, FeDomain domain = {}) {
    auto lhs = [r, family, control, grid, domain](const EvalContext&) {
        const auto worst = check_functional_equation(r, family, grid, domain);
        const double ctrl = check_functional_equation(r, {control}, grid, domain).front();
        Measurement m;
        m.computed = *std::max_element(worst.begin(), worst.end());
        m.kernel_err = 0.0;
        m.holds = ctrl > 0.1;
        if (!m.holds) m.note = "negative control residual " + std::to_string(ctrl) + " is not above 0.1";
        return m;
    };
    add(out, std::move(id), Category::FunctionalEquation, rat(0), 1e-11, lhs, std::move(quote));
}

std::vector<Pt> grid2(const std::vector<double>& a, const std::vector<double>& b) { return grid_product({a, b}); }

const std::vector<double> kMixed{-2.0, -1.0, -0.3, 0.0, 0.5, 1.0, 3.0};
const std::vector<double> kPos{0.2, 0.5, 1.5, 2.0, 3.0};
const std::vector<double> kNonNeg{0.0, 0.25, 0.5, 1.0, 1.7, 2.5};

// Signed integral of h from a to b using the engine's quadrature.
double quad(const Integrand& h, double a, double b) {
    if (a == b) return 0.0;
    const double s = a < b ? 1.0 : -1.0;
    QuadOptions q;
    q.target_abs_tol = 1e-15;
    return s * integrate(h, Interval::finite(std::min(a, b), std::max(a, b)), q).value;
}

}  // namespace

void register_fe(std::vector<Identity>& out) {
    // params {a, b, shape}: 0 ax, 1 bx, 2 ax on x <= 0 and bx beyond, 3 swapped, 4 control (a+b)x/2
    fe(out, "amm-12347", "f(f(x)) - (a+b) f(x) + ab x = 0 with 0 < a < 1 < b: f = ax, f = bx, and the two piecewise mixes",
       [](const Params& p, const Pt& x) {
           const double a = p[0], b = p[1];
           auto f = [&](double t) {
               switch (static_cast<int>(p[2])) {
               case 0: return a * t;
               case 1: return b * t;
               case 2: return t <= 0 ? a * t : b * t;
               case 3: return t <= 0 ? b * t : a * t;
               default: return 0.5 * (a + b) * t;
               }
           };
           return f(f(x[0])) - (a + b) * f(x[0]) + a * b * x[0];
       },
       {{0.5, 2, 0}, {0.5, 2, 1}, {0.5, 2, 2}, {0.5, 2, 3}, {0.25, 3, 0}, {0.25, 3, 1}, {0.25, 3, 2}, {0.25, 3, 3}},
       {0.5, 2, 4}, grid_product({kMixed}));

    fe(out, "amm-12406", "f(x^2) + 2p f(x) = (x + p)^2 on [0,1] has the solution f(x) = x + p^2/(1 + 2p)",
       [](const Params& p, const Pt& x) {
           const double P = p[0];
           auto f = [&](double t) { return p[1] == 0 ? t + P * P / (1.0 + 2.0 * P) : t; };
           return f(x[0] * x[0]) + 2.0 * P * f(x[0]) - (x[0] + P) * (x[0] + P);
       },
       {{1, 0}, {0.5, 0}, {2, 0}}, {1, 1}, grid_product({{0.0, 0.1, 0.25, 0.4, 0.5, 0.75, 0.9, 1.0}}),
       [](const Params&, const Pt& x) { return x[0] >= 0 && x[0] <= 1; });

    fe(out, "amm-12460", "f(a + q) - q g(-q) = f(a) is solved by f(x) = mx + c, g = m",
       [](const Params& p, const Pt& x) {
           const double m = p[0], c = p[1];
           const bool linear = p[2] == 0;
           auto f = [&](double t) { return linear ? m * t + c : t * t; };
           auto g = [&](double) { return linear ? m : 2.0; };
           return f(x[0] + x[1]) - x[1] * g(-x[1]) - f(x[0]);
       },
       {{1, 0, 0}, {-2, 3, 0}, {0.5, -1, 0}}, {0, 0, 1}, grid2(kMixed, kMixed));

    fe(out, "amm-12290", "|f(x+iy)|^2 = |f(x)|^2 + |f(iy)|^2 holds for f = az, b sin kz, c sinh kz",
       [](const Params& p, const Pt& x) {
           using C = std::complex<double>;
           const double coef = p[0], k = p[1];
           auto f = [&](C z) -> C {
               switch (static_cast<int>(p[2])) {
               case 0: return coef * z;
               case 1: return coef * std::sin(k * z);
               case 2: return coef * std::sinh(k * z);
               default: return std::cos(z);
               }
           };
           return std::norm(f(C(x[0], x[1]))) - std::norm(f(C(x[0], 0))) - std::norm(f(C(0, x[1])));
       },
       {{1.5, 0, 0}, {-0.7, 1, 1}, {2, 0.6, 1}, {1, 1, 2}, {0.5, 1.3, 2}}, {1, 1, 3},
       grid2({-1.5, -0.5, 0.3, 1.2}, {-1.0, -0.2, 0.4, 1.1}));

    fe(out, "amm-10747", "f'(f(t)) = 2 f(t), f(1) = 1 on t >= 0 is solved by f(t) = t^2, and then f o f = f^2",
       [](const Params& p, const Pt& x) {
           const double e = p[0] == 0 ? 2.0 : 3.0;
           auto f = [e](double t) { return std::pow(t, e); };
           auto df = [e](double t) { return e * std::pow(t, e - 1.0); };
           const double t = x[0];
           return std::fabs(df(f(t)) - 2.0 * f(t)) + std::fabs(f(f(t)) - f(t) * f(t)) + std::fabs(f(1.0) - 1.0);
       },
       {{0}}, {1}, grid_product({kNonNeg}), [](const Params&, const Pt& x) { return x[0] >= 0; });

    fe(out, "amm-10854", "f(x + 2f(y)) = f(x) + f(y) + y has the solutions f(x) = x and f(x) = -x/2",
       [](const Params& p, const Pt& x) {
           auto f = [&](double t) { return p[0] * t; };
           return f(x[0] + 2.0 * f(x[1])) - f(x[0]) - f(x[1]) - x[1];
       },
       {{1}, {-0.5}}, {2}, grid2(kMixed, kMixed));

    fe(out, "crux-4747", "f(x^2 f(x) + f(y)) = f(f(x^3)) + y has the solutions f(x) = x and f(x) = -x",
       [](const Params& p, const Pt& x) {
           auto f = [&](double t) { return p[0] * t; };
           const double a = x[0], b = x[1];
           return f(a * a * f(a) + f(b)) - f(f(a * a * a)) - b;
       },
       {{1}, {-1}}, {2}, grid2(kMixed, kMixed));

    fe(out, "crux-4772", "f(ax + f(y)) = (y/a) f(xy + 1) on positive reals is solved by f(x) = a/x",
       [](const Params& p, const Pt& x) {
           const double a = p[0];
           auto f = [&](double t) { return p[1] == 0 ? a / t : t * t; };
           return f(a * x[0] + f(x[1])) - x[1] / a * f(x[0] * x[1] + 1.0);
       },
       {{2, 0}, {0.5, 0}, {3, 0}}, {2, 1}, grid2(kPos, kPos),
       [](const Params&, const Pt& x) { return x[0] > 0 && x[1] > 0; });

    fe(out, "crux-4801", "f(x + 1/y) = y f(xy + y) for x, y > 0 has the solutions f(x) = C/(1+x)",
       [](const Params& p, const Pt& x) {
           const double C = p[0];
           auto f = [&](double t) { return p[1] == 0 ? C / (1.0 + t) : 1.0 / t; };
           return f(x[0] + 1.0 / x[1]) - x[1] * f(x[0] * x[1] + x[1]);
       },
       {{1, 0}, {-2, 0}, {3.5, 0}}, {1, 1}, grid2({0.2, 0.5, 1.5, 2.0, 3.0}, kPos),
       [](const Params&, const Pt& x) { return x[0] > 0 && x[1] > 0 && x[0] != 1.0; });

    fe(out, "crux-4889", "(1/(y-x)) int_x^y f(g(t)) dt = f((x+y)/2) for x != y holds for f = ax + b, g(x) = x",
       [](const Params& p, const Pt& x) {
           const double a = p[0], b = p[1];
           auto f = [&](double t) { return p[2] == 0 ? a * t + b : t * t; };
           return quad([&](double t) { return f(t); }, x[0], x[1]) / (x[1] - x[0]) - f(0.5 * (x[0] + x[1]));
       },
       {{1, 0, 0}, {-2, 1.5, 0}, {0.3, -4, 0}}, {0, 0, 1}, grid2({-2.0, 0.0, 1.0}, {-1.0, 0.5, 3.0}),
       [](const Params&, const Pt& x) { return x[0] != x[1]; });

    fe(out, "crux-4893", "x^2 + int_1^{1/x} f(x^2 t) dt = 1 for x > 0 is solved by f(x) = 2x",
       [](const Params& p, const Pt& x) {
           const double k = p[0];
           const double v = x[0];
           return v * v + quad([&](double t) { return k * v * v * t; }, 1.0, 1.0 / v) - 1.0;
       },
       {{2}}, {1}, grid_product({kPos}), [](const Params&, const Pt& x) { return x[0] > 0; });

    fe(out, "crux-4896", "f(f(x) + y f(z) - 1) + f(z+1) = z f(y) + f(x+z) has the solutions f = 0 and f(x) = x",
       [](const Params& p, const Pt& x) {
           auto f = [&](double t) { return p[0] * t + p[1]; };
           const double a = x[0], b = x[1], c = x[2];
           return f(f(a) + b * f(c) - 1.0) + f(c + 1.0) - c * f(b) - f(a + c);
       },
       {{0, 0}, {1, 0}}, {1, 1}, grid_product({{-2.0, 0.5, 3.0}, {-1.0, 0.0, 2.0}, {-2.0, 1.0, 1.5}}));

    fe(out, "crux-4914", "f(x^2 + y + 1) = x f(x) + f(y) + 1 for x, y >= 0: only the identity",
       [](const Params& p, const Pt& x) {
           auto f = [&](double t) { return p[0] * t; };
           return f(x[0] * x[0] + x[1] + 1.0) - x[0] * f(x[0]) - f(x[1]) - 1.0;
       },
       {{1}}, {2}, grid2(kNonNeg, kNonNeg), [](const Params&, const Pt& x) { return x[0] >= 0 && x[1] >= 0; });

    // params {a, slope}
    fe(out, "crux-4925", "f(x+y) + x f(f(y)) = f(f(x)) + f(y) + a x y has solutions only for a in {0,1}: f = 0 and f(x) = x",
       [](const Params& p, const Pt& x) {
           const double a = p[0];
           auto f = [&](double t) { return p[1] * t; };
           return f(x[0] + x[1]) + x[0] * f(f(x[1])) - f(f(x[0])) - f(x[1]) - a * x[0] * x[1];
       },
       {{0, 0}, {1, 1}}, {1, 0}, grid2(kMixed, kMixed));

    fe(out, "crux-4953", "(x+y) f(x+y) - x f(x) - y f(y) = a (y f(x) + x f(y)) with a = 3 is solved by f(x) = cx^2",
       [](const Params& p, const Pt& x) {
           const double c = p[0];
           auto f = [&](double t) { return p[1] == 0 ? c * t * t : t * t * t; };
           const double a = 3.0, u = x[0], v = x[1];
           return (u + v) * f(u + v) - u * f(u) - v * f(v) - a * (v * f(u) + u * f(v));
       },
       {{2, 0}, {-1, 0}, {0.5, 0}}, {1, 1}, grid2({-2, -1, 0.5, 1, 3}, {-2, -1, 0.5, 1, 3}));

    // params {lambda, beta, shape}, a = 1.3
    fe(out, "gaz-108C", "f(x) f(a - x) = f(0) f(a) is solved by f(x) = lambda e^{beta x}",
       [](const Params& p, const Pt& x) {
           constexpr double a = 1.3;
           auto f = [&](double t) { return p[2] == 0 ? p[0] * std::exp(p[1] * t) : 1.0 + t; };
           return f(x[0]) * f(a - x[0]) - f(0.0) * f(a);
       },
       {{1, 1, 0}, {-2, 0.5, 0}, {0.7, -1.2, 0}, {3, 0, 0}}, {0, 0, 1}, grid_product({kMixed}));
}

}  // namespace idv::detail
