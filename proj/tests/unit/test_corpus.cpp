#include <doctest.h>

#include <cmath>
#include <set>

#include "idv/corpus.hpp"

using namespace idv;

TEST_CASE("manifest is well formed") {
    const auto& m = builtin_manifest();
    REQUIRE(m.size() >= 100);
    std::set<std::string> ids;
    for (const auto& e : m) {
        CAPTURE(e.id);
        CHECK(ids.insert(e.id).second);
        CHECK(e.lhs);
        CHECK(!e.quote.empty());
        CHECK(e.tol >= 0);
        CHECK(e.id == e.journal + "-" + e.problem);
        if (e.rhs) CHECK(std::isfinite(cf_eval(e.rhs)));
    }
}

TEST_CASE("lookups") {
    const Identity& a = find_identity("amm-12398");
    CHECK(std::fabs(cf_eval(a.rhs) - 2 / (std::exp(1.0) - 1)) <= 1e-15);
    CHECK(a.tol == 1e-10);
    const Identity& b = find_identity("crux-4988");
    CHECK(cf_eval(b.rhs) == -0.5);
    CHECK(b.tol == 1e-9);
    CHECK_THROWS_AS(find_identity("nonexistent"), NotFound);
}

TEST_CASE("filters") {
    CHECK(Filter::parse("").matches(find_identity("mm-2147")));
    CHECK(Filter::parse("category=product").matches(find_identity("mm-2147")));
    CHECK_FALSE(Filter::parse("category=series").matches(find_identity("mm-2147")));
    CHECK(Filter::parse("source=mm,category=product").matches(find_identity("mm-2147")));
    CHECK(Filter::parse("tag=headline").matches(find_identity("amm-12479")));
    CHECK_THROWS_AS(Filter::parse("colour=red"), PreconditionError);
    CHECK_THROWS_AS(Filter::parse("category=bogus"), PreconditionError);
    CHECK_THROWS_AS(Filter::parse("id"), PreconditionError);
}

TEST_CASE("single verifications") {
    auto o = verify("mm-2202a");
    CHECK(o.status == Status::Pass);
    CHECK(std::fabs(o.computed - 6.283185307179586) <= 1e-9);
    o = verify("amm-12479");
    CHECK(o.status == Status::Pass);
    CHECK(std::fabs(o.computed - 1.6) <= 1e-8);
    o = verify("mm-2117");
    CHECK(o.status == Status::Pass);
    CHECK(o.tol == 0);
}

TEST_CASE("tolerance scaling") {
    const Identity& e = find_identity("amm-12398");
    VerifyOptions v;
    CHECK(effective_tol(e, v) == e.tol);
    v.profile = Profile::Fast;
    CHECK(effective_tol(e, v) == doctest::Approx(e.tol * 100));
    v.tol_scale = 0.5;
    CHECK(effective_tol(e, v) == doctest::Approx(e.tol * 50));
    // exact entries never loosen
    CHECK(effective_tol(find_identity("mm-2117"), v) == 0);
}

TEST_CASE("a failing tolerance is reported, not hidden") {
    VerifyOptions v;
    v.tol_scale = 1e-12;
    const auto o = verify("crux-4894", v);
    CHECK(o.status == Status::Fail);
}

TEST_CASE("verify_all on categories") {
    VerifyOptions v;
    v.profile = Profile::Fast;
    const Report r = verify_all(Filter::parse("category=exact"), v);
    CHECK(r.outcomes.size() > 10);
    CHECK(r.pass == static_cast<int>(r.outcomes.size()));
    const Report none = verify_all(Filter::parse("id=amm-12398,category=product"), v);
    CHECK(none.outcomes.empty());
    CHECK(none.pass + none.fail + none.error == 0);
}

TEST_CASE("parallel and serial runs agree") {
    VerifyOptions v;
    v.profile = Profile::Fast;
    const Filter f = Filter::parse("category=series");
    const Report a = verify_all(f, v);
    v.jobs = 3;
    const Report b = verify_all(f, v);
    REQUIRE(a.outcomes.size() == b.outcomes.size());
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
        CHECK(a.outcomes[i].id == b.outcomes[i].id);
        CHECK(a.outcomes[i].computed == b.outcomes[i].computed);
        CHECK(a.outcomes[i].status == b.outcomes[i].status);
    }
}

TEST_CASE("functional equation checker") {
    // f(x) = c x^2 solves f(x+y) + f(x-y) = 2 f(x) + 2 f(y)
    auto fe = [](const std::vector<double>& p, const std::vector<double>& pt) {
        auto f = [&](double t) { return p[0] * t * t; };
        const double x = pt[0], y = pt[1];
        return f(x + y) + f(x - y) - 2 * f(x) - 2 * f(y);
    };
    const auto grid = grid_product({{-2, -1, 0.5, 1, 3}, {-2, -1, 0.5, 1, 3}});
    CHECK(grid.size() == 25);
    const auto r = check_functional_equation(fe, {{2.0}, {-0.5}}, grid);
    REQUIRE(r.size() == 2);
    for (double v : r) CHECK(v <= 1e-11);

    // f(x) = a/x solves x f(x) = a; the control f(x) = a/x + 1 does not
    auto recip = [](const std::vector<double>& p, const std::vector<double>& pt) {
        const double x = pt[0];
        return x * (p[0] / x + p[1]) - p[0];
    };
    const auto pos = grid_product({{0.25, 0.5, 1, 2, 7}});
    const auto s = check_functional_equation(recip, {{2.0, 0.0}, {2.0, 1.0}}, pos);
    CHECK(s[0] <= 1e-11);
    CHECK(s[1] > 0.1);

    // grids must avoid excluded points
    auto pole = [](const std::vector<double>&, const std::vector<double>& pt) { return 1 / (pt[0] - 1); };
    auto off_pole = [](const std::vector<double>&, const std::vector<double>& pt) { return pt[0] != 1; };
    CHECK_THROWS_AS(check_functional_equation(pole, {{0.0}}, grid_product({{0, 1, 2}}), off_pole), DomainError);
    CHECK_NOTHROW(check_functional_equation(pole, {{0.0}}, grid_product({{0, 2}}), off_pole));
}

TEST_CASE("names round trip") {
    for (auto c : {Category::Integral, Category::Series, Category::DoubleSeries, Category::Product, Category::Limit,
                   Category::RootSum, Category::Exact, Category::FunctionalEquation, Category::Inequality,
                   Category::Extremum, Category::Consistency})
        CHECK(parse_category(category_name(c)) == c);
    CHECK(parse_profile("fast") == Profile::Fast);
    CHECK(!parse_profile("slow"));
}
