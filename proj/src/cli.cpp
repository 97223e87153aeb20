#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "idv/cli.hpp"
#include "idv/errors.hpp"

#ifndef IDV_ENGINE_VERSION
#define IDV_ENGINE_VERSION "dev"
#endif

namespace idv {

std::string engine_version() { return IDV_ENGINE_VERSION; }

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write to " + path + " failed");
}

std::vector<const Identity*> select(const Filter& filter) {
    std::vector<const Identity*> v;
    for (const auto& e : builtin_manifest())
        if (filter.matches(e)) v.push_back(&e);
    return v;
}

}  // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.jobs < 1) throw PreconditionError("--jobs must be >= 1");
        if (!(cfg.tol_scale > 0)) throw PreconditionError("--tol-scale must be > 0");
        const Filter filter = Filter::parse(cfg.filter);
        for (const auto& [key, value] : filter.clauses())
            if (key == "id") find_identity(value);  // unknown ids are usage errors

        if (cfg.command == "list") {
            for (const auto* e : select(filter))
                out << e->id << "  " << category_name(e->category) << "  " << e->quote << "\n";
            return 0;
        }
        if (cfg.command == "show") {
            for (const auto* e : select(filter)) {
                out << "id:       " << e->id << "\n"
                    << "source:   " << e->journal << " " << e->problem << "\n"
                    << "category: " << category_name(e->category) << "\n"
                    << "claim:    " << e->quote << "\n";
                if (e->rhs) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.17g", cf_eval(e->rhs));
                    out << "rhs:      " << cf_serialize(e->rhs) << " = " << buf << "\n";
                } else {
                    out << "rhs:      supplied by the kernel\n";
                }
                out << "tol:      " << e->tol << (e->tol == 0 ? " (exact)" : "") << "\n";
                if (!e->tags.empty()) {
                    out << "tags:    ";
                    for (const auto& t : e->tags) out << " " << t;
                    out << "\n";
                }
                if (!e->notes.empty()) out << "notes:    " << e->notes << "\n";
                out << "\n";
            }
            return 0;
        }
        if (cfg.command != "verify") throw PreconditionError("unknown command '" + cfg.command + "'");

        VerifyOptions vo{cfg.profile, cfg.jobs, cfg.tol_scale, cfg.seed};
        Report rep = verify_all(filter, vo);
        rep.engine_version = engine_version();
        for (const auto& o : rep.outcomes) out << outcome_line(o) << "\n";
        out << "summary: " << rep.outcomes.size() << " checked, " << rep.pass << " pass, " << rep.fail << " fail, "
            << rep.error << " error (profile " << profile_name(rep.profile) << ")\n";
        if (cfg.json_path) write_file(*cfg.json_path, report_json(rep));
        if (cfg.md_path) write_file(*cfg.md_path, report_markdown(rep));
        return (rep.fail == 0 && rep.error == 0) ? 0 : 1;
    } catch (const std::exception& ex) {
        err << "idverify: " << ex.what() << "\n";
        return 2;
    }
}

int main_cli(int argc, char** argv) {
    CLI::App app{"Verify the identity corpus numerically and exactly"};
    app.require_subcommand(1, 1);
    CliConfig cfg;
    if (const char* env = std::getenv("IDVERIFY_PROFILE")) {
        const auto p = parse_profile(env);
        if (!p) {
            std::cerr << "idverify: IDVERIFY_PROFILE must be fast or full\n";
            return 2;
        }
        cfg.profile = *p;
    }
    std::string profile;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--filter", cfg.filter, "KEY=VALUE[,...] with keys id, category, source, tag");
    };
    auto* verify = app.add_subcommand("verify", "run the selected identities");
    auto* list = app.add_subcommand("list", "list the selected identities");
    auto* show = app.add_subcommand("show", "describe the selected identities");
    for (auto* s : {verify, list, show}) add_common(s);
    verify->add_option("--profile", profile, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    std::string json, md;
    verify->add_option("--json", json, "write a JSON report");
    verify->add_option("--md", md, "write a markdown report");
    verify->add_option("--tol-scale", cfg.tol_scale, "multiply every tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "seed for randomized sub-checks");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (!profile.empty()) cfg.profile = *parse_profile(profile);
    if (!json.empty()) cfg.json_path = json;
    if (!md.empty()) cfg.md_path = md;
    cfg.command = app.get_subcommands().front()->get_name();
    return run(cfg, std::cout, std::cerr);
}

}  // namespace idv
