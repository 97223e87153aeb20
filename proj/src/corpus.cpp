#include <atomic>
#include <chrono>
#include <ctime>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "corpus_internal.hpp"

namespace idv {

namespace {

constexpr std::pair<Category, std::string_view> kCategoryNames[] = {
    {Category::Integral, "integral"},
    {Category::Series, "series"},
    {Category::DoubleSeries, "double_series"},
    {Category::Product, "product"},
    {Category::Limit, "limit"},
    {Category::RootSum, "root_sum"},
    {Category::Exact, "exact"},
    {Category::FunctionalEquation, "functional_equation"},
    {Category::Inequality, "inequality"},
    {Category::Extremum, "extremum"},
    {Category::Consistency, "consistency"},
};

std::vector<Identity> build_manifest() {
    std::vector<Identity> out;
    detail::register_integrals(out);
    detail::register_series(out);
    detail::register_limits(out);
    detail::register_roots(out);
    detail::register_exact(out);
    detail::register_fe(out);
    detail::register_misc(out);
    std::sort(out.begin(), out.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].id == out[i - 1].id) throw std::logic_error("duplicate corpus id " + out[i].id);
    return out;
}

}  // namespace

std::string_view category_name(Category c) {
    for (const auto& [k, name] : kCategoryNames)
        if (k == c) return name;
    return "unknown";
}

std::optional<Category> parse_category(std::string_view s) {
    for (const auto& [k, name] : kCategoryNames)
        if (name == s) return k;
    return std::nullopt;
}

std::string_view profile_name(Profile p) { return p == Profile::Fast ? "fast" : "full"; }

std::optional<Profile> parse_profile(std::string_view s) {
    if (s == "fast") return Profile::Fast;
    if (s == "full") return Profile::Full;
    return std::nullopt;
}

std::string_view status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
    }
    return "error";
}

const std::vector<Identity>& builtin_manifest() {
    static const std::vector<Identity> manifest = build_manifest();
    return manifest;
}

const Identity& find_identity(std::string_view id) {
    const auto& m = builtin_manifest();
    auto it = std::lower_bound(m.begin(), m.end(), id, [](const Identity& e, std::string_view v) { return e.id < v; });
    if (it == m.end() || it->id != id) throw NotFound("no corpus entry with id '" + std::string(id) + "'");
    return *it;
}

Filter Filter::parse(std::string_view text) {
    Filter f;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view clause = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (clause.empty()) {
            if (comma == text.size()) break;
            continue;
        }
        const auto eq = clause.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == clause.size())
            throw PreconditionError("filter clause '" + std::string(clause) + "' is not KEY=VALUE");
        std::string key(clause.substr(0, eq)), value(clause.substr(eq + 1));
        if (key != "id" && key != "category" && key != "source" && key != "tag")
            throw PreconditionError("unknown filter key '" + key + "' (expected id, category, source, tag)");
        if (key == "category" && !parse_category(value))
            throw PreconditionError("unknown category '" + value + "'");
        f.clauses_.emplace_back(std::move(key), std::move(value));
    }
    return f;
}

bool Filter::matches(const Identity& e) const {
    for (const auto& [key, value] : clauses_) {
        bool ok = false;
        if (key == "id") {
            ok = e.id == value;
        } else if (key == "category") {
            ok = category_name(e.category) == value;
        } else if (key == "source") {
            ok = e.journal == value || e.problem == value || e.journal + "-" + e.problem == value;
        } else if (key == "tag") {
            ok = std::find(e.tags.begin(), e.tags.end(), value) != e.tags.end();
        }
        if (!ok) return false;
    }
    return true;
}

double effective_tol(const Identity& e, const VerifyOptions& opts) {
    return e.tol * (opts.profile == Profile::Fast ? 100.0 : 1.0) * opts.tol_scale;
}

VerificationOutcome verify(const Identity& e, const VerifyOptions& opts) {
    VerificationOutcome o;
    o.id = e.id;
    o.category = e.category;
    o.tol = effective_tol(e, opts);
    EvalContext ctx{opts.profile, opts.seed};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Measurement m = e.lhs(ctx);
        o.computed = m.computed;
        o.kernel_err = m.kernel_err;
        if (e.rhs) o.expected = cf_eval(e.rhs);
        else if (m.expected) o.expected = *m.expected;
        else throw std::logic_error("entry has neither a closed form nor a kernel-supplied expected value");
        o.abs_err = std::fabs(o.computed - o.expected);
        const bool within = o.abs_err <= o.tol && o.kernel_err <= o.tol;
        o.status = (within && m.holds && std::isfinite(o.computed)) ? Status::Pass : Status::Fail;
        o.message = std::move(m.note);
        if (!m.holds && o.message.empty()) o.message = "side condition violated";
    } catch (const std::exception& ex) {
        o.status = Status::Error;
        o.message = ex.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

VerificationOutcome verify(std::string_view id, const VerifyOptions& opts) { return verify(find_identity(id), opts); }

Report verify_all(const Filter& filter, const VerifyOptions& opts) {
    if (opts.jobs < 1) throw PreconditionError("jobs must be >= 1");
    if (!(opts.tol_scale > 0)) throw PreconditionError("tol_scale must be > 0");
    std::vector<const Identity*> selected;
    for (const auto& e : builtin_manifest())
        if (filter.matches(e)) selected.push_back(&e);

    Report rep;
    rep.profile = opts.profile;
    rep.seed = opts.seed;
    rep.outcomes.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) rep.outcomes[i] = verify(*selected[i], opts);
    };
    const int nthreads = std::min<int>(opts.jobs, static_cast<int>(std::max<std::size_t>(1, selected.size())));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    // selected is already in id order; keep it that way explicitly
    std::sort(rep.outcomes.begin(), rep.outcomes.end(),
              [](const VerificationOutcome& a, const VerificationOutcome& b) { return a.id < b.id; });
    for (const auto& o : rep.outcomes) {
        if (o.status == Status::Pass) ++rep.pass;
        else if (o.status == Status::Fail) ++rep.fail;
        else ++rep.error;
    }
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    rep.timestamp = buf;
    return rep;
}

std::vector<double> check_functional_equation(const FeResidual& fe, const std::vector<std::vector<double>>& family,
                                              const std::vector<std::vector<double>>& grid, const FeDomain& domain) {
    if (grid.empty()) throw PreconditionError("functional equation grid is empty");
    std::vector<double> out;
    out.reserve(family.size());
    for (const auto& params : family) {
        double worst = 0.0;
        for (const auto& pt : grid) {
            if (domain && !domain(params, pt)) throw DomainError("grid point outside the equation's domain");
            const double r = fe(params, pt);
            if (!std::isfinite(r)) throw EvaluationError("functional equation residual not finite");
            worst = std::max(worst, std::fabs(r));
        }
        out.push_back(worst);
    }
    return out;
}

std::vector<std::vector<double>> grid_product(const std::vector<std::vector<double>>& axes) {
    std::vector<std::vector<double>> out{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<double>> next;
        for (const auto& prefix : out)
            for (double v : axis) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace idv
