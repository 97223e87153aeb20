#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "idv/corpus.hpp"

namespace idv {

std::string engine_version();

struct CliConfig {
    std::string command = "verify";  // list | show | verify
    std::string filter;
    Profile profile = Profile::Full;
    int jobs = 1;
    std::optional<std::string> json_path;
    std::optional<std::string> md_path;
    double tol_scale = 1.0;
    std::uint64_t seed = kDefaultSeed;
};

// Exit codes: 0 all selected entries pass, 1 some fail or error, 2 usage or
// internal error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and dispatches to run().
int main_cli(int argc, char** argv);

std::string report_json(const Report& rep);
Report report_from_json(const std::string& text);
std::string report_markdown(const Report& rep);
// Human-readable per-entry line as printed by `verify`.
std::string outcome_line(const VerificationOutcome& o);

}  // namespace idv
