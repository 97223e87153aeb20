#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "idv/quad.hpp"

namespace idv {

using Term = std::function<double(long)>;
using DoubleTerm = std::function<double(long, long)>;

struct TailStrategy {
    enum class Kind { GeometricRatio, IntegralTail, AlternatingAccel, AsymptoticModel, NoneTruncate };
    Kind kind = Kind::NoneTruncate;
    double q = 0.5;
    double c = std::numeric_limits<double>::quiet_NaN();  // NaN: fit from the terms
    double alpha = 2.0;
    long N = 0;  // last index summed directly; for geometric, a hard cap
    std::function<double(double)> model;

    static TailStrategy geometric(double q, long max_terms = 100000);
    static TailStrategy integral(long N, std::function<double(double)> model);
    static TailStrategy alternating(long terms = 40);
    static TailStrategy asymptotic(double c, double alpha, long N);
    static TailStrategy asymptotic_fit(double alpha, long N);
    static TailStrategy truncate(long N);
};

NumericResult sum_series(const Term& term, long start, const TailStrategy& tail, double tol);

// Sum_{k>=0} (-1)^k a_k with a_k = magnitude(start + k), CVZ acceleration.
NumericResult sum_alternating(const Term& magnitude, long start, double tol, int terms = 40);
// Raw CVZ combination of the given a_k (no sign or monotonicity checks).
NumericResult cvz(const std::vector<double>& a);

struct DoubleTail {
    std::function<TailStrategy(long m)> row;
    TailStrategy outer;
};
NumericResult sum_double(const DoubleTerm& term, const DoubleTail& tail, double tol);

NumericResult product_infinite(const Term& factor, long start, const TailStrategy& tail, double tol);
// Same, with the caller supplying log(factor) directly (avoids rounding
// factors that are 1 + tiny).
NumericResult product_infinite_log(const Term& log_factor, long start, const TailStrategy& tail, double tol);

enum class LimitMethod { Richardson, WynnEpsilon, Aitken };

struct LimitOptions {
    int K = 6;
    double n0 = 8.0;
    LimitMethod method = LimitMethod::Richardson;
    // Richardson error exponents p_j (error terms n^{-p_j}); empty means 1,2,3,...
    std::vector<double> exponents;
    // If non-empty, least-squares-free exact fit s(n) = L + sum c_j phi_j(n)
    // on the trailing samples instead of the Richardson table.
    std::vector<std::function<double(double)>> basis;
};

// seq(k) is the sequence value at n = n0 * 2^k.
NumericResult limit_extrapolate(const std::function<double(int)>& seq, const LimitOptions& opts);
NumericResult limit_from_samples(const std::vector<double>& samples, const LimitOptions& opts);

// Integral over [a, inf) of an integrand whose consecutive panels of length
// `panel` alternate in sign; the panel sums are combined with CVZ.
NumericResult integrate_alternating_panels(const Integrand& f, double a, double panel, const QuadOptions& opts,
                                           int panels = 40);

}  // namespace idv
