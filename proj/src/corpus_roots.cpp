#include "corpus_internal.hpp"
#include "idv/solve.hpp"

namespace idv::detail {

namespace {

using namespace cf;

Measurement m12479(const EvalContext&) {
    const double r3 = std::sqrt(3.0);
    const double delta = 1.0 / (16.0 * r3);
    auto f = [r3](double x) { return 2.0 * std::cos(r3 * x) + std::exp(-3.0 * x); };
    auto s = [r3](long n) { return (kPi / 2 + kPi * static_cast<double>(n)) / r3; };
    constexpr long kRoots = 40;
    const auto roots = enumerate_roots(f, [&](long n) { return Bracket{s(n) - 0.125, s(n) + 0.125}; }, kRoots);

    bool local = true, spaced = true;
    for (long n = 0; n < kRoots; ++n) {
        local = local && std::fabs(roots[n] - s(n)) < delta;
        if (n > 0) spaced = spaced && roots[n] - roots[n - 1] > 1.0;
    }
    // beyond the computed roots only the proven localisation is used
    TailModel tail{s, [delta](long) { return delta; }};
    Measurement m = from(root_power_sum(roots, 6, tail, kRoots));
    m.holds = local && spaced;
    if (!local) m.note = "a root lies outside its localisation window";
    else if (!spaced) m.note = "two consecutive roots are closer than 1";
    return m;
}

// Sign changes of f on a uniform grid over [a, b], each refined to a root.
std::vector<double> scan_roots(const RealFn& f, double a, double b, int cells) {
    std::vector<double> out;
    const double h = (b - a) / cells;
    double x0 = a, f0 = f(a);
    for (int i = 1; i <= cells; ++i) {
        const double x1 = a + i * h, f1 = f(x1);
        if (f0 == 0.0) out.push_back(x0);
        else if (f0 * f1 < 0) out.push_back(root_bracketed(f, Bracket{x0, x1}, 1e-16));
        x0 = x1;
        f0 = f1;
    }
    return out;
}

Measurement m4905(const EvalContext&) {
    // unknown x = arctan t on (0, pi/2)
    auto g = [](double x) {
        const double t = std::tan(x), u = 1.0 / t;
        return t + t * t + t * t * t + u + u * u + u * u * u - 70.0;
    };
    const auto roots = scan_roots(g, 1e-3, kPi / 2 - 1e-3, 4000);
    Measurement m;
    if (roots.empty()) throw EvaluationError("no root found");
    m.computed = roots.front();
    m.kernel_err = 1e-15;
    m.holds = roots.size() == 2 && std::fabs(roots.back() - 5.0 * kPi / 12.0) <= 1e-12;
    if (!m.holds) m.note = "expected exactly the two roots pi/12 and 5 pi/12";
    return m;
}

Measurement m4636(const EvalContext&) {
    const double l3 = std::log(3.0), l4 = std::log(4.0);
    auto g = [&](double x) { return l4 * std::log(std::pow(4.0, x) - 7.0) - l3 * std::log(std::pow(3.0, x) + 7.0); };
    // the left side exists only for 4^x > 7
    const double lo = std::log(7.0) / l4;
    const auto roots = scan_roots(g, lo + 1e-9, 30.0, 20000);
    if (roots.empty()) throw EvaluationError("no root found");
    Measurement m;
    m.computed = roots.front();
    m.kernel_err = 1e-15;
    m.holds = roots.size() == 1;
    if (!m.holds) m.note = "more than one root on the scanned domain";
    return m;
}

}  // namespace

void register_roots(std::vector<Identity>& out) {
    const auto R = Category::RootSum;
    add(out, "amm-12479", R, rat(8, 5), 1e-8, m12479,
        "the positive zeros r_n of 2 cos(sqrt3 x) + e^{-3x} satisfy |r_n - s_n| < 1/(16 sqrt3), s_n = (pi/2 + n pi)/sqrt3, "
        "r_n - r_{n-1} > 1, and sum_{n>=0} r_n^{-6} = 8/5",
        {"headline"});
    add(out, "crux-4905", R, c("pi") / rat(12), 1e-8, m4905,
        "t + t^2 + t^3 + 1/t + 1/t^2 + 1/t^3 = 70 with t = tan x, 0 < x < pi/2, has exactly the solutions x = pi/12 and "
        "5 pi/12");
    add(out, "crux-4636", R, rat(2), 1e-8, m4636, "log 4 log(4^x - 7) = log 3 log(3^x + 7) has the unique solution x = 2");
}

}  // namespace idv::detail
