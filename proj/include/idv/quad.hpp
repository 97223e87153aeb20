#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "idv/errors.hpp"

namespace idv {

struct NumericResult {
    double value = 0.0;
    double err = 0.0;
    long evaluations = 0;
    bool converged = true;
};

struct Interval {
    enum class Kind { Finite, SemiInfinite, RealLine };
    Kind kind = Kind::Finite;
    double a = 0.0;
    double b = 1.0;
    std::vector<double> split_points;
    // Advisory only: the double-exponential rules never sample an endpoint,
    // so these flags do not change the algorithm.
    bool left_singular = false;
    bool right_singular = false;

    static Interval finite(double a, double b, std::vector<double> splits = {});
    static Interval semi_infinite(double a, std::vector<double> splits = {});
    static Interval real_line(std::vector<double> splits = {});
    Interval& singular(bool left, bool right) {
        left_singular = left;
        right_singular = right;
        return *this;
    }
};

struct QuadOptions {
    double target_abs_tol = 1e-10;
    int max_level = 12;
};

using Integrand = std::function<double(double)>;
// Integrand that also receives the exact distances to the left and right end
// of the current piece (right distance is +inf on an unbounded piece). Lets
// callers evaluate expressions like log(1-x) without losing digits near 1.
using EdgeIntegrand = std::function<double(double x, double from_left, double to_right)>;
using ComplexIntegrand = std::function<std::complex<double>(double)>;

NumericResult integrate(const Integrand& f, const Interval& iv, const QuadOptions& opts = {});
NumericResult integrate_edge(const EdgeIntegrand& f, const Interval& iv, const QuadOptions& opts = {});
std::pair<NumericResult, NumericResult> integrate_complex(const ComplexIntegrand& f, const Interval& iv,
                                                          const QuadOptions& opts = {});

}  // namespace idv
