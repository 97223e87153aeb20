#include <doctest.h>

#include <cmath>

#include "idv/constants.hpp"

using namespace idv;
using doctest::Approx;

namespace {

// Machin: pi/4 = 4 atan(1/5) - atan(1/239), each by its Taylor series
long double machin_pi() {
    auto at = [](long double x) {
        long double s = 0, p = x;
        for (int k = 0; k < 40; ++k, p *= -x * x) s += p / (2 * k + 1);
        return s;
    };
    return 4 * (4 * at(1.0L / 5) - at(1.0L / 239));
}

// alternating sum with the half-term end correction, error O(N^-3)
long double catalan_oracle() {
    const long N = 1000000;
    long double s = 0;
    for (long n = N - 1; n >= 0; --n) s += ((n % 2) ? -1.0L : 1.0L) / ((2.0L * n + 1) * (2.0L * n + 1));
    return s + 0.5L / ((2.0L * N + 1) * (2.0L * N + 1));
}

long double gamma_oracle() {
    const long n = 10000;
    long double h = 0;
    for (long k = n; k >= 1; --k) h += 1.0L / k;
    const long double x = n;
    return h - std::log(x) - 1 / (2 * x) + 1 / (12 * x * x) - 1 / (120 * x * x * x * x);
}

}  // namespace

TEST_CASE("named constants agree with independent values") {
    CHECK(std::fabs(const_value("pi") - static_cast<double>(machin_pi())) <= 1e-15);
    CHECK(std::fabs(const_value("catalan") - static_cast<double>(catalan_oracle())) <= 1e-15);
    CHECK(std::fabs(const_value("euler_gamma") - static_cast<double>(gamma_oracle())) <= 1e-15);
    CHECK(const_value("zeta3") == Approx(1.2020569031595943).epsilon(1e-15));
    CHECK_THROWS_AS(const_value("tau"), UnknownName);
}

TEST_CASE("closed forms evaluate") {
    using namespace cf;
    CHECK(cf_eval(log(exp(rat(2)) + rat(1)) - rat(2)) == Approx(0.1269280110).epsilon(1e-10));
    CHECK(cf_eval(rat(7) * c("zeta3") / (rat(8) * pow(c("pi"), rat(2)))) == Approx(0.1065695997).epsilon(1e-10));
    CHECK(cf_eval(pow(rat(2) + pow(rat(2), rat(2, 3)), rat(3, 2))) == Approx(6.794693902).epsilon(1e-10));
    CHECK(cf_eval(rat(1) + rat(0)) == 1.0);
}

TEST_CASE("closed form errors") {
    using namespace cf;
    CHECK_THROWS_AS(cf_eval(rat(1) / rat(0)), DomainError);
    CHECK_THROWS_AS(cf_eval(log(rat(-1))), DomainError);
    CHECK_THROWS_AS(cf_eval(sqrt(rat(-2))), DomainError);
    CHECK_THROWS_AS(rat(1, 0), DomainError);
    CHECK_THROWS_AS(cf_parse("2 +"), PreconditionError);
    CHECK_THROWS_AS(cf_parse("frobnicate(1)"), std::exception);
}

TEST_CASE("serialize and parse round trip") {
    using namespace cf;
    const ClosedForm forms[] = {
        rat(2) / (c("e") - rat(1)),
        rat(-1, 2),
        pow(c("pi"), rat(2)) / rat(12) - rat(1, 2),
        rat(2) * sinh(c("pi")) / (rat(5) * c("pi")),
        rat(-240) * pow(c("zeta3"), rat(2)),
        log(rat(1) + sqrt(rat(2))),
        cos(rat(1)) * cosh(rat(1)),
        -atan(rat(1, 3)),
    };
    for (const auto& f : forms) {
        const std::string text = cf_serialize(f);
        const ClosedForm back = cf_parse(text);
        CHECK(cf_serialize(back) == text);
        CHECK(cf_eval(back) == cf_eval(f));
    }
}

TEST_CASE("depth counts nesting") {
    using namespace cf;
    CHECK(cf_depth(rat(3)) == 1);
    CHECK(cf_depth(rat(1) + rat(2)) == 2);
    CHECK(cf_depth(sqrt(rat(1) + rat(2))) == 3);
}
