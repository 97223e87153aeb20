#pragma once

#include "idv/errors.hpp"
#include "idv/rational.hpp"

namespace idv {

double zeta(double s);
double eta(double s);
double dilog(double x);

double trigamma(double x);
// trigamma(x) - 1/x - 1/(2x^2), evaluated without the cancellation that the
// plain difference suffers for large x.
double trigamma_tail(double x);

Rational harmonic(long n, int order);
// Floating H_n; asymptotic expansion above n = 32, direct sum below.
double harmonic_real(long n);

enum class ChebKind { T, U };
double chebyshev(ChebKind kind, int n, double x);

double log_gamma(double x);
double beta(double a, double b);

// Even-index Bernoulli numbers B_0, B_2, ..., B_{2*kBernoulliCount-2}.
inline constexpr int kBernoulliCount = 16;
double bernoulli_even(int k);  // returns B_{2k}

}  // namespace idv
