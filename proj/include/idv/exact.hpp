#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idv/errors.hpp"
#include "idv/rational.hpp"

namespace idv {

// Polynomial with rational coefficients, ascending degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly monomial(int degree, Rational c = 1);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    Rational operator()(const Rational& x) const;
    Poly derivative() const;
    Poly integral() const;  // antiderivative vanishing at 0

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

Poly compose(const Poly& f, const Poly& g);

Rational euler_finite_difference(const Poly& p, int n);

using MultiIndex = std::vector<int>;  // non-decreasing, entries >= 1
std::vector<std::pair<MultiIndex, BigInt>> mo_coefficients(int n);
bool compose_derivative_check(const Poly& f, const Poly& g, int n, const Rational& x);

bool lagrange_reciprocal_identity(const std::vector<Rational>& points);

Rational gregory_coefficient(int k);

struct SuiteParams {
    long n = 0;
    long m = 0;
    long r = 0;
    long s = 0;
    Rational a = 0;
    Rational b = 0;
    double x = 0.0;
};
bool binomial_identity_suite(std::string_view name, const SuiteParams& p);

// Real-root count of a cubic by sign changes on a grid over its Cauchy bound.
int count_real_roots_cubic(double c3, double c2, double c1, double c0);
Rational discriminant_2184(const Rational& a, const Rational& b);

using Solution = std::vector<long>;
std::vector<Solution> search_diophantine(std::string_view kind, long bound);

using Matrix = std::vector<std::vector<int>>;
Matrix gl_sum(int q, int n);

std::vector<long> primes_upto(long N, long block = 1L << 18);

}  // namespace idv
