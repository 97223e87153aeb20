#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "idv/corpus.hpp"
#include "idv/errors.hpp"
#include "idv/kahan.hpp"

namespace idv::detail {

void register_integrals(std::vector<Identity>& out);
void register_series(std::vector<Identity>& out);
void register_limits(std::vector<Identity>& out);
void register_roots(std::vector<Identity>& out);
void register_exact(std::vector<Identity>& out);
void register_fe(std::vector<Identity>& out);
void register_misc(std::vector<Identity>& out);

inline constexpr double kPi = std::numbers::pi;

inline Measurement from(const NumericResult& r) {
    Measurement m;
    m.computed = r.value;
    m.kernel_err = r.err;
    if (!r.converged) m.note = "kernel reported non-convergence";
    return m;
}

// Boolean measurement: computed 1 when the statement holds, expected 1.
inline Measurement boolean(bool ok, std::string note = {}) {
    Measurement m;
    m.computed = ok ? 1.0 : 0.0;
    m.expected = 1.0;
    m.kernel_err = 0.0;
    m.holds = ok;
    m.note = std::move(note);
    return m;
}

// Adds an entry; split the id into journal/problem at the first dash.
inline Identity& add(std::vector<Identity>& out, std::string id, Category cat, ClosedForm rhs, double tol,
                     std::function<Measurement(const EvalContext&)> lhs, std::string quote,
                     std::vector<std::string> tags = {}, std::string notes = {}) {
    Identity e;
    const auto dash = id.find('-');
    e.journal = id.substr(0, dash);
    e.problem = dash == std::string::npos ? std::string() : id.substr(dash + 1);
    e.id = std::move(id);
    e.category = cat;
    e.rhs = std::move(rhs);
    e.tol = tol;
    e.lhs = std::move(lhs);
    e.quote = std::move(quote);
    e.tags = std::move(tags);
    e.notes = std::move(notes);
    out.push_back(std::move(e));
    return out.back();
}

}  // namespace idv::detail
