// Acceptance run: one line per criterion, exit status 1 if any criterion fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "idv/cli.hpp"
#include "idv/corpus.hpp"
#include "idv/quad.hpp"
#include "idv/seqsum.hpp"
#include "idv/solve.hpp"
#include "idv/specfun.hpp"

using namespace idv;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    std::printf("criterion %2d: %s  %s", n, ok ? "PASS" : "FAIL", what.c_str());
    if (!detail.empty()) std::printf("  [%s]", detail.c_str());
    std::printf("\n");
    if (!ok) ++failures;
}

using Outcomes = std::map<std::string, VerificationOutcome>;

Outcomes index(const Report& r) {
    Outcomes m;
    for (const auto& o : r.outcomes) m[o.id] = o;
    return m;
}

// every listed id must pass and sit within `tol` of its expected value
std::pair<bool, std::string> within(const Outcomes& all, const std::vector<std::pair<std::string, double>>& ids) {
    std::string bad;
    double worst = 0;
    for (const auto& [id, tol] : ids) {
        auto it = all.find(id);
        if (it == all.end()) {
            bad += " missing:" + id;
            continue;
        }
        const auto& o = it->second;
        worst = std::max(worst, o.abs_err);
        if (o.status != Status::Pass || !(o.abs_err <= tol)) bad += " " + id;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst abs_err %.2e", worst);
    return {bad.empty(), bad.empty() ? std::string(buf) : "failing:" + bad};
}

std::pair<bool, std::string> all_pass(const Outcomes& all, const std::vector<std::string>& ids) {
    std::string bad;
    for (const auto& id : ids) {
        auto it = all.find(id);
        if (it == all.end() || it->second.status != Status::Pass || it->second.abs_err != 0.0) bad += " " + id;
    }
    return {bad.empty(), bad.empty() ? std::to_string(ids.size()) + " entries exact" : "failing:" + bad};
}

std::string outcomes_without_timing(const Report& r) {
    auto j = nlohmann::json::parse(report_json(r));
    auto& out = j.at("outcomes");
    for (auto& o : out) o.erase("seconds");
    return out.dump();
}

bool kernel_properties(std::string& detail) {
    bool ok = true;
    auto fail = [&](const std::string& what) {
        ok = false;
        detail += " " + what;
    };
    // polynomial exactness
    for (int k = 0; k <= 14; ++k) {
        const double v = integrate([k](double x) { return std::pow(x, k); }, Interval::finite(-1, 1), {1e-15, 12}).value;
        const double want = (k % 2) ? 0.0 : 2.0 / (k + 1);
        if (!(std::fabs(v - want) <= 1e-13)) fail("x^" + std::to_string(k));
    }
    // singular model integrals
    const double lg = integrate([](double x) { return std::log(x); }, Interval::finite(0, 1).singular(true, false)).value;
    if (!(std::fabs(lg + 1) <= 1e-11)) fail("log");
    const double rs =
        integrate([](double x) { return 1 / std::sqrt(x); }, Interval::finite(0, 1).singular(true, false)).value;
    if (!(std::fabs(rs - 2) <= 1e-11)) fail("rsqrt");
    // alternating acceleration with 40 terms
    const double l2 = sum_alternating([](long n) { return 1.0 / (n + 1.0); }, 0, 1e-13, 40).value;
    if (!(std::fabs(l2 - std::log(2.0)) <= 1e-13)) fail("log2");
    const double q4 = sum_alternating([](long n) { return 1.0 / (2.0 * n + 1); }, 0, 1e-13, 40).value;
    if (!(std::fabs(q4 - kPi / 4) <= 1e-13)) fail("pi/4");
    // special-function identities
    for (double s : {1.5, 2.0, 3.0, 4.5, 8.0})
        if (!(std::fabs(eta(s) - (1 - std::pow(2.0, 1 - s)) * zeta(s)) <= 1e-11)) fail("eta(" + std::to_string(s) + ")");
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.95})
        if (!(std::fabs(dilog(x) + dilog(1 - x) - (kPi * kPi / 6 - std::log(x) * std::log(1 - x))) <= 1e-11))
            fail("Li2 reflection");
    for (double x : {-0.2, -1.0, -2.5, -30.0}) {
        const double l = std::log(-x);
        if (!(std::fabs(dilog(x) + dilog(1 / x) + kPi * kPi / 6 + l * l / 2) <= 1e-11)) fail("Li2 inversion");
    }
    for (double x : {0.2, 1.0, 3.7, 20.0, 400.0})
        if (!(std::fabs(trigamma(x) - trigamma(x + 1) - 1 / (x * x)) <= 1e-11)) fail("trigamma");
    return ok;
}

}  // namespace

int main() {
    VerifyOptions full;
    full.profile = Profile::Full;
    const Report first = verify_all(Filter{}, full);
    const Outcomes all = index(first);

    {
        auto [ok, d] = within(all, {{"amm-12527", 1e-9},
                                    {"mm-2223", 1e-9},
                                    {"crux-4929", 1e-9},
                                    {"mm-2202a", 1e-9},
                                    {"gaz-108Ha", 1e-9},
                                    {"amm-12501", 1e-9}});
        report(1, ok, "headline integrals match their closed forms to 1e-9", d);
    }
    {
        auto [ok, d] = within(all, {{"amm-12398", 1e-9},
                                    {"crux-4988", 1e-9},
                                    {"crux-4826", 1e-9},
                                    {"mm-2147", 1e-9},
                                    {"crux-4836a", 1e-9},
                                    {"crux-4836b", 1e-9},
                                    {"crux-4836c", 1e-9},
                                    {"crux-4894", 1e-5}});
        report(2, ok, "series and products to 1e-9 (slow log-square series to 1e-5)", d);
    }
    {
        auto [ok, d] = within(all, {{"amm-12479", 1e-8}});
        // recheck localisation and spacing of the 40 roots outside the corpus entry
        const double r3 = std::sqrt(3.0), delta = 1 / (16 * r3);
        auto f = [r3](double x) { return 2 * std::cos(r3 * x) + std::exp(-3 * x); };
        auto s = [r3](long n) { return (kPi / 2 + kPi * double(n)) / r3; };
        const auto roots = enumerate_roots(f, [&](long n) { return Bracket{s(n) - 0.125, s(n) + 0.125}; }, 40);
        bool geom = roots.size() == 40;
        for (std::size_t n = 0; geom && n < roots.size(); ++n) {
            geom = std::fabs(roots[n] - s(long(n))) < delta && std::fabs(f(roots[n])) < 1e-12;
            if (n > 0) geom = geom && roots[n] - roots[n - 1] > 1;
        }
        report(3, ok && geom, "root-power sum equals 8/5 to 1e-8; 40 roots localised and spaced",
               d + (geom ? "" : "; localisation violated"));
    }
    {
        auto [ok, d] = within(all, {{"gaz-108G", 1e-5}, {"mm-2212", 1e-5}, {"crux-4959", 1e-5}, {"cmj-1294", 1e-5}});
        report(4, ok, "extrapolated limits to 1e-5", d);
    }
    {
        auto [ok, d] = all_pass(all, {"amm-12415", "amm-12535", "crux-4951", "quicky-1140a", "elem-1449", "crux-4900",
                                      "amm-10697", "amm-11070", "mm-2117", "crux-4803", "gaz-108E", "crux-4811",
                                      "crux-4850"});
        report(5, ok, "exact suites, searches and group sums hold with equality", d);
    }
    {
        std::string bad;
        double worst = 0;
        int n = 0;
        for (const auto& e : builtin_manifest()) {
            if (e.category != Category::FunctionalEquation) continue;
            ++n;
            const auto& o = all.at(e.id);
            worst = std::max(worst, std::fabs(o.computed));
            // the entry fails its side condition when a negative control comes out small
            if (o.status != Status::Pass || !(std::fabs(o.computed) <= 1e-11)) bad += " " + e.id;
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d families, worst residual %.2e, controls > 0.1", n, worst);
        report(6, bad.empty() && n > 0, "functional-equation families vanish on their grids", bad.empty() ? buf : "failing:" + bad);
    }
    {
        std::string d;
        const bool ok = kernel_properties(d);
        report(7, ok, "quadrature, acceleration and special-function property suites", ok ? "" : "failing:" + d);
    }
    {
        std::string bad;
        int checked = 0;
        for (const auto& o : first.outcomes) {
            if (o.status == Status::Error) {
                bad += " " + o.id + "(error)";
                continue;
            }
            ++checked;
            if (!(std::fabs(o.computed - o.expected) <= std::max(10 * o.kernel_err, o.tol))) bad += " " + o.id;
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d entries, %d pass of %zu", checked, first.pass, first.outcomes.size());
        report(8, bad.empty() && first.pass == static_cast<int>(first.outcomes.size()),
               "error estimates cover the observed error on every entry", bad.empty() ? buf : "violations:" + bad);
    }
    {
        const Report second = verify_all(Filter{}, full);
        const bool same = outcomes_without_timing(first) == outcomes_without_timing(second);
        report(9, same, "two full runs with the same seed give identical outcomes", "wall-clock seconds excluded");
    }
    std::printf(
        "criterion 10: EXCLUDED  existence/uniqueness proofs, the cluster-point result for (sin n)^n and the "
        "logarithmic-rate limit are not checked numerically\n");

    std::printf("acceptance: %d failing criteria\n", failures);
    return failures == 0 ? 0 : 1;
}
