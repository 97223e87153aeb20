#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "idv/cli.hpp"
#include "idv/errors.hpp"

namespace idv {

namespace {

using Json = nlohmann::ordered_json;

// JSON has no spelling for NaN or infinity, so those become null
Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double num_of(const Json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

}  // namespace

std::string report_json(const Report& rep) {
    Json outcomes = Json::array();
    for (const auto& x : rep.outcomes) {
        outcomes.push_back({{"id", x.id},
                            {"category", category_name(x.category)},
                            {"status", status_name(x.status)},
                            {"computed", num(x.computed)},
                            {"expected", num(x.expected)},
                            {"abs_err", num(x.abs_err)},
                            {"kernel_err", num(x.kernel_err)},
                            {"tol", num(x.tol)},
                            {"seconds", num(x.seconds)},
                            {"message", x.message}});
    }
    const Json j = {{"engine_version", rep.engine_version},
                    {"profile", profile_name(rep.profile)},
                    {"seed", rep.seed},
                    {"timestamp", rep.timestamp},
                    {"outcomes", std::move(outcomes)},
                    {"summary", {{"pass", rep.pass}, {"fail", rep.fail}, {"error", rep.error}}}};
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    const auto j = Json::parse(text);
    Report r;
    r.engine_version = j.at("engine_version").get<std::string>();
    const auto p = parse_profile(j.at("profile").get<std::string>());
    if (!p) throw PreconditionError("report has an unknown profile");
    r.profile = *p;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.timestamp = j.at("timestamp").get<std::string>();
    for (const auto& x : j.at("outcomes")) {
        VerificationOutcome o;
        o.id = x.at("id").get<std::string>();
        const auto cat = parse_category(x.value("category", ""));
        if (!cat) throw PreconditionError("report has an unknown category for " + o.id);
        o.category = *cat;
        o.message = x.value("message", "");
        const auto s = x.at("status").get<std::string>();
        o.status = s == "pass" ? Status::Pass : s == "fail" ? Status::Fail : Status::Error;
        o.computed = num_of(x.at("computed"));
        o.expected = num_of(x.at("expected"));
        o.abs_err = num_of(x.at("abs_err"));
        o.kernel_err = num_of(x.at("kernel_err"));
        o.tol = num_of(x.at("tol"));
        o.seconds = num_of(x.at("seconds"));
        if (o.status == Status::Pass) ++r.pass;
        else if (o.status == Status::Fail) ++r.fail;
        else ++r.error;
        r.outcomes.push_back(std::move(o));
    }
    return r;
}

std::string outcome_line(const VerificationOutcome& o) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-14s %-5s computed=%-24.17g expected=%-24.17g abs_err=%-10.3g tol=%-8.1e %.3fs",
                  o.id.c_str(), std::string(status_name(o.status)).c_str(), o.computed, o.expected, o.abs_err, o.tol,
                  o.seconds);
    std::string line = buf;
    if (o.status != Status::Pass && !o.message.empty()) line += "  (" + o.message + ")";
    return line;
}

std::string report_markdown(const Report& rep) {
    std::map<std::string, std::vector<const VerificationOutcome*>> groups;
    for (const auto& o : rep.outcomes) {
        std::string cat(category_name(o.category));
        // outcomes re-read from JSON carry no category; recover it from the manifest
        try {
            cat = std::string(category_name(find_identity(o.id).category));
        } catch (const NotFound&) {
        }
        groups[cat].push_back(&o);
    }
    std::ostringstream md;
    md << "# Verification report\n\n";
    md << "- engine version: " << rep.engine_version << "\n- profile: " << profile_name(rep.profile)
       << "\n- seed: " << rep.seed << "\n- timestamp: " << rep.timestamp << "\n- pass " << rep.pass << ", fail "
       << rep.fail << ", error " << rep.error << "\n";
    for (const auto& [cat, items] : groups) {
        int pass = 0;
        for (const auto* o : items) pass += o->status == Status::Pass;
        md << "\n## " << cat << " (" << pass << "/" << items.size() << " pass)\n\n";
        md << "| id | status | computed | expected | abs_err | kernel_err | tol | seconds |\n";
        md << "|---|---|---|---|---|---|---|---|\n";
        for (const auto* o : items) {
            char row[320];
            std::snprintf(row, sizeof row, "| %s | %s | %.17g | %.17g | %.3g | %.3g | %.1e | %.3f |\n", o->id.c_str(),
                          std::string(status_name(o->status)).c_str(), o->computed, o->expected, o->abs_err,
                          o->kernel_err, o->tol, o->seconds);
            md << row;
        }
    }
    return md.str();
}

}  // namespace idv
