#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "idv/exact.hpp"

using namespace idv;

namespace {

std::map<MultiIndex, BigInt> as_map(const std::vector<std::pair<MultiIndex, BigInt>>& v) {
    return {v.begin(), v.end()};
}

std::set<Solution> as_set(const std::vector<Solution>& v) { return {v.begin(), v.end()}; }

bool is_prime_slow(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const Poly p({1, 2, 3});  // 1 + 2u + 3u^2
    CHECK(p.degree() == 2);
    CHECK(p(Rational(1, 2)) == Rational(11, 4));
    CHECK(p.derivative() == Poly({2, 6}));
    CHECK(p.integral() == Poly({0, 1, 1, 1}));
    CHECK(p * Poly({0, 1}) == Poly({0, 1, 2, 3}));
    CHECK(p + Poly({-1, -2, -3}) == Poly());
    CHECK(Poly().degree() == -1);
    // (u^2) o (x + 1) = x^2 + 2x + 1
    CHECK(compose(Poly::monomial(2), Poly({1, 1})) == Poly({1, 2, 1}));
}

TEST_CASE("euler finite differences") {
    CHECK(euler_finite_difference(Poly({Rational(7)}), 1) == 0);
    CHECK(euler_finite_difference(Poly::monomial(3), 3) == -6);
    // C(2 + k, 2) = (k^2 + 3k + 2)/2 as a polynomial in k
    CHECK(euler_finite_difference(Poly({1, Rational(3, 2), Rational(1, 2)}), 2) == 1);
    // degree below n always vanishes
    CHECK(euler_finite_difference(Poly({5, -1, 4}), 3) == 0);
}

TEST_CASE("multi-index chain rule coefficients") {
    using M = std::map<MultiIndex, BigInt>;
    CHECK(as_map(mo_coefficients(1)) == M{{{1}, 1}});
    CHECK(as_map(mo_coefficients(2)) == M{{{2}, 1}, {{1, 1}, 1}});
    CHECK(as_map(mo_coefficients(3)) == M{{{3}, 1}, {{1, 2}, 3}, {{1, 1, 1}, 1}});
    // number of terms is the partition count, coefficients sum to the Bell number
    const auto m6 = mo_coefficients(6);
    BigInt total = 0;
    for (const auto& [k, c] : m6) total += c;
    CHECK(m6.size() == 11);
    CHECK(total == 203);
}

TEST_CASE("composition derivatives") {
    CHECK(compose_derivative_check(Poly::monomial(2), Poly({0, 1, 0, 1}), 4, 1));
    CHECK(compose_derivative_check(Poly({3, 1, 4}), Poly({1, 5, 9, 2}), 1, Rational(2, 7)));
    CHECK(compose_derivative_check(Poly::monomial(3), Poly({2, 0, 1}), 5, Rational(1, 2)));
}

TEST_CASE("lagrange reciprocal identity") {
    CHECK(lagrange_reciprocal_identity({5}));
    CHECK(lagrange_reciprocal_identity({1, 2}));
    CHECK(lagrange_reciprocal_identity({1, 2, 3}));
    CHECK(lagrange_reciprocal_identity({Rational(-1, 3), Rational(2, 5), 7, Rational(-9, 4)}));
}

TEST_CASE("gregory coefficients") {
    CHECK(gregory_coefficient(1) == Rational(1, 2));
    CHECK(gregory_coefficient(2) == Rational(1, 12));
    CHECK(gregory_coefficient(3) == Rational(1, 24));
    CHECK(gregory_coefficient(4) == Rational(19, 720));
    const Rational a5 = gregory_coefficient(5);
    CHECK(a5 == Rational(3, 160));
    CHECK((a5 >= Rational(1, 75) && a5 <= Rational(1, 5)));
}

TEST_CASE("identity suites") {
    SuiteParams p;
    p.n = 0;
    CHECK(binomial_identity_suite("dbl_binom_12415", p));
    for (long n = 1; n <= 8; ++n) {
        p.n = n;
        CHECK(binomial_identity_suite("dbl_binom_12415", p));
    }
    SuiteParams q;
    q.n = 3;
    q.m = 2;
    CHECK(binomial_identity_suite("quicky_1140a", q));
    for (long n = 1; n <= 15; ++n) {
        SuiteParams e;
        e.n = n;
        CHECK(binomial_identity_suite("elem_1449", e));
        CHECK(binomial_identity_suite("alt_recip_4951", e));
    }
    SuiteParams d;
    d.a = Rational(3, 7);
    d.b = Rational(-5, 2);
    CHECK(binomial_identity_suite("discriminant_2184", d));
    CHECK_THROWS(binomial_identity_suite("no_such_suite", p));
}

TEST_CASE("diophantine searches") {
    using S = std::set<Solution>;
    CHECK(as_set(search_diophantine("factorial_power_2117", 20)) == S{{1, 1}, {1, 2}, {2, 4}});
    CHECK(as_set(search_diophantine("quintuplet_108E", 1000000)) == S{{5}});
    CHECK(as_set(search_diophantine("pow23_square_4803", 12)) == S{{2, 1, 2}});
    CHECK(as_set(search_diophantine("cube_square_4811", 10000)) == S{{2}});
    CHECK_THROWS(search_diophantine("unknown_kind", 5));
}

TEST_CASE("sums over general linear groups") {
    CHECK(gl_sum(2, 2) == Matrix{{0, 0}, {0, 0}});
    CHECK(gl_sum(2, 1) == Matrix{{1}});
    CHECK(gl_sum(3, 1) == Matrix{{0}});
    CHECK(gl_sum(3, 2) == Matrix{{0, 0}, {0, 0}});
}

TEST_CASE("prime sieve") {
    CHECK(primes_upto(10) == std::vector<long>{2, 3, 5, 7});
    CHECK(primes_upto(1).empty());
    const auto small = primes_upto(5000, 64);
    std::vector<long> slow;
    for (long n = 2; n <= 5000; ++n)
        if (is_prime_slow(n)) slow.push_back(n);
    CHECK(small == slow);
    // block size must not change the answer
    CHECK(primes_upto(1000000).size() == 78498);
    CHECK(primes_upto(1000000, 1000).size() == 78498);
}

TEST_CASE("big integer helpers") {
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(binomial(5, 7) == 0);
}
