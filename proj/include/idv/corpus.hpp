#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idv/constants.hpp"
#include "idv/quad.hpp"

namespace idv {

enum class Category {
    Integral,
    Series,
    DoubleSeries,
    Product,
    Limit,
    RootSum,
    Exact,
    FunctionalEquation,
    Inequality,
    Extremum,
    Consistency,
};

std::string_view category_name(Category c);
std::optional<Category> parse_category(std::string_view s);

enum class Profile { Fast, Full };
std::string_view profile_name(Profile p);
std::optional<Profile> parse_profile(std::string_view s);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// What a kernel sees while it runs: the profile decides budgets and kernel
// tolerances, the seed drives every randomized sub-check.
struct EvalContext {
    Profile profile = Profile::Full;
    std::uint64_t seed = kDefaultSeed;

    bool fast() const { return profile == Profile::Fast; }
    long budget(long full) const { return fast() ? std::max(1L, full / 10) : full; }
    double tol(double full) const { return fast() ? full * 100.0 : full; }
    QuadOptions quad(double full_tol = 1e-12, int level = 12) const {
        QuadOptions q;
        q.target_abs_tol = tol(full_tol);
        q.max_level = level;
        return q;
    }
};

// Result of running an identity's left-hand side.
struct Measurement {
    double computed = 0.0;
    double kernel_err = 0.0;
    std::optional<double> expected;  // used when the identity has no closed form
    bool holds = true;               // side conditions (bounds, localisation, controls)
    std::string note;
};

struct Identity {
    std::string id;
    std::string journal;  // amm, mm, cmj, elem, crux, gaz, quicky
    std::string problem;
    Category category = Category::Integral;
    std::function<Measurement(const EvalContext&)> lhs;
    ClosedForm rhs;  // null when the kernel supplies its own expected value
    double tol = 1e-10;  // 0 means exact equality
    std::vector<std::string> tags;
    std::string quote;
    std::string notes;
};

enum class Status { Pass, Fail, Error };
std::string_view status_name(Status s);

struct VerificationOutcome {
    std::string id;
    Category category = Category::Integral;
    Status status = Status::Error;
    double computed = 0.0;
    double expected = 0.0;
    double abs_err = 0.0;
    double kernel_err = 0.0;
    double tol = 0.0;
    double seconds = 0.0;
    std::string message;
};

struct Report {
    std::string engine_version;
    Profile profile = Profile::Full;
    std::uint64_t seed = kDefaultSeed;
    std::string timestamp;
    std::vector<VerificationOutcome> outcomes;  // sorted by id
    int pass = 0;
    int fail = 0;
    int error = 0;
};

const std::vector<Identity>& builtin_manifest();
const Identity& find_identity(std::string_view id);  // throws NotFound

// AND of key=value clauses; keys are id, category, source, tag.
class Filter {
public:
    Filter() = default;
    static Filter parse(std::string_view text);  // throws PreconditionError
    bool matches(const Identity& e) const;
    const std::vector<std::pair<std::string, std::string>>& clauses() const { return clauses_; }

private:
    std::vector<std::pair<std::string, std::string>> clauses_;
};

struct VerifyOptions {
    Profile profile = Profile::Full;
    int jobs = 1;
    double tol_scale = 1.0;
    std::uint64_t seed = kDefaultSeed;
};

// Effective tolerance: entry tol, x100 in the fast profile, times tol_scale.
double effective_tol(const Identity& e, const VerifyOptions& opts);

VerificationOutcome verify(const Identity& e, const VerifyOptions& opts = {});
VerificationOutcome verify(std::string_view id, const VerifyOptions& opts = {});
Report verify_all(const Filter& filter, const VerifyOptions& opts = {});

// Functional-equation residual checking: for every parameter vector in
// `family`, the maximum |residual(params, point)| over the grid.
using FeResidual = std::function<double(const std::vector<double>& params, const std::vector<double>& point)>;
using FeDomain = std::function<bool(const std::vector<double>& params, const std::vector<double>& point)>;
std::vector<double> check_functional_equation(const FeResidual& fe, const std::vector<std::vector<double>>& family,
                                              const std::vector<std::vector<double>>& grid,
                                              const FeDomain& domain = {});

// Cartesian product of per-coordinate sample lists.
std::vector<std::vector<double>> grid_product(const std::vector<std::vector<double>>& axes);

}  // namespace idv
