#include <cmath>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idv/cli.hpp"
#include "idv/corpus.hpp"
#include "idv/quad.hpp"
#include "idv/seqsum.hpp"
#include "idv/specfun.hpp"

namespace py = pybind11;
using namespace idv;

namespace {

Profile profile_arg(const std::string& s) {
    auto p = parse_profile(s);
    if (!p) throw py::value_error("profile must be 'fast' or 'full'");
    return *p;
}

py::dict outcome_dict(const VerificationOutcome& o) {
    py::dict d;
    d["id"] = o.id;
    d["category"] = std::string(category_name(o.category));
    d["status"] = std::string(status_name(o.status));
    d["computed"] = o.computed;
    d["expected"] = o.expected;
    d["abs_err"] = o.abs_err;
    d["kernel_err"] = o.kernel_err;
    d["tol"] = o.tol;
    d["seconds"] = o.seconds;
    d["message"] = o.message;
    return d;
}

}  // namespace

PYBIND11_MODULE(_idverify, m) {
    m.doc() = "numeric and exact verification of a corpus of closed-form identities";

    py::register_exception<NotFound>(m, "NotFound", PyExc_KeyError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("engine_version", &engine_version);

    m.def(
        "list_identities",
        [](const std::string& filter) {
            const Filter f = Filter::parse(filter);
            py::list out;
            for (const auto& e : builtin_manifest()) {
                if (!f.matches(e)) continue;
                py::dict d;
                d["id"] = e.id;
                d["category"] = std::string(category_name(e.category));
                d["claim"] = e.quote;
                d["tol"] = e.tol;
                d["tags"] = e.tags;
                d["rhs"] = e.rhs ? py::object(py::str(cf_serialize(e.rhs))) : py::object(py::none());
                out.append(d);
            }
            return out;
        },
        py::arg("filter") = "");

    m.def(
        "verify",
        [](const std::string& id, const std::string& profile, double tol_scale, std::uint64_t seed) {
            VerifyOptions o{profile_arg(profile), 1, tol_scale, seed};
            VerificationOutcome r;
            {
                py::gil_scoped_release nogil;
                r = verify(id, o);
            }
            return outcome_dict(r);
        },
        py::arg("id"), py::arg("profile") = "full", py::arg("tol_scale") = 1.0, py::arg("seed") = kDefaultSeed);

    m.def(
        "verify_all_json",
        [](const std::string& filter, const std::string& profile, int jobs, std::uint64_t seed) {
            VerifyOptions o{profile_arg(profile), jobs, 1.0, seed};
            const Filter f = Filter::parse(filter);
            Report r;
            {
                py::gil_scoped_release nogil;
                r = verify_all(f, o);
            }
            r.engine_version = engine_version();
            return report_json(r);
        },
        py::arg("filter") = "", py::arg("profile") = "full", py::arg("jobs") = 1, py::arg("seed") = kDefaultSeed);

    m.def("zeta", &zeta, py::arg("s"));
    m.def("eta", &eta, py::arg("s"));
    m.def("dilog", &dilog, py::arg("x"));
    m.def("trigamma", &trigamma, py::arg("x"));
    m.def("const_value", [](const std::string& n) { return const_value(n); }, py::arg("name"));
    m.def("closed_form", [](const std::string& text) { return cf_eval(cf_parse(text)); }, py::arg("text"));

    // integrand is a Python callable, so the GIL stays held
    m.def(
        "integrate",
        [](const std::function<double(double)>& f, double a, double b, double tol) {
            Interval iv = std::isinf(b) ? Interval::semi_infinite(a) : Interval::finite(a, b);
            const NumericResult r = integrate(f, iv, QuadOptions{tol, 12});
            return py::make_tuple(r.value, r.err);
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-12);

    m.def(
        "sum_alternating",
        [](const std::function<double(long)>& mag, long start, int terms) {
            const NumericResult r = sum_alternating(mag, start, 1e-13, terms);
            return py::make_tuple(r.value, r.err);
        },
        py::arg("magnitude"), py::arg("start") = 0, py::arg("terms") = 40);
}
