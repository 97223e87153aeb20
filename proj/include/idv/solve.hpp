#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "idv/quad.hpp"

namespace idv {

using RealFn = std::function<double(double)>;

struct Bracket {
    double a;
    double b;
};

// Validates a < b and a strict sign change of f over [a, b].
Bracket make_bracket(const RealFn& f, double a, double b);

double root_bracketed(const RealFn& f, const Bracket& br, double tol);

std::vector<double> enumerate_roots(const RealFn& f, const std::function<Bracket(long)>& bracket_gen, long count,
                                    double tol = 1e-15);

struct TailModel {
    std::function<double(long)> asymptote;
    std::function<double(long)> deviation_bound;
};

NumericResult root_power_sum(const std::vector<double>& roots, int exponent, const TailModel& tail, long tail_start);

struct Box {
    std::vector<double> lo;
    std::vector<double> hi;
};

struct MinimizeOptions {
    int starts = 64;
    double tol = 1e-12;
    std::uint64_t seed = 20240601;
    // Optional equality constraint c(x) = 0, enforced by a quadratic penalty.
    std::function<double(const std::vector<double>&)> constraint;
    double penalty = 1e6;
};

struct MinimizeResult {
    std::vector<double> point;
    double value = 0.0;
    double err = 0.0;   // spread of the final simplex of the winning descent
    int feasible_starts = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;
MinimizeResult minimize_multistart(const Objective& objective, const Box& domain, const MinimizeOptions& opts = {});

// Deterministic scrambled Halton points in [0,1)^dim.
std::vector<std::vector<double>> scrambled_halton(int count, int dim, std::uint64_t seed);

}  // namespace idv
