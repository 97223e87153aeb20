#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "idv/cli.hpp"

using namespace idv;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(CliConfig cfg) {
    std::ostringstream o, e;
    const int rc = run(cfg, o, e);
    return {rc, o.str(), e.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("idv_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("verify one identity") {
    CliConfig c;
    c.filter = "id=amm-12398";
    const Run r = run_cli(c);
    CHECK(r.code == 0);
    CHECK(r.out.find("amm-12398") != std::string::npos);
    CHECK(r.out.find(" pass ") != std::string::npos);
    CHECK(r.out.find("1 pass, 0 fail, 0 error") != std::string::npos);
}

TEST_CASE("list by category") {
    CliConfig c;
    c.command = "list";
    c.filter = "category=product";
    const Run r = run_cli(c);
    CHECK(r.code == 0);
    CHECK(r.out.find("mm-2147") != std::string::npos);
    CHECK(r.out.find("amm-12398") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CliConfig c;
    c.filter = "id=bogus";
    Run r = run_cli(c);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    c.filter = "nonsense";
    CHECK(run_cli(c).code == 2);
    c.filter = "";
    c.jobs = 0;
    CHECK(run_cli(c).code == 2);
}

TEST_CASE("a failing check exits with 1") {
    CliConfig c;
    c.filter = "id=crux-4894";
    c.tol_scale = 1e-12;
    CHECK(run_cli(c).code == 1);
}

TEST_CASE("json report round trip and determinism across job counts") {
    CliConfig c;
    c.filter = "category=limit";
    c.profile = Profile::Fast;
    c.json_path = temp_path("a.json");
    REQUIRE(run_cli(c).code == 0);
    c.jobs = 2;
    c.json_path = temp_path("b.json");
    REQUIRE(run_cli(c).code == 0);

    const Report a = report_from_json(slurp(temp_path("a.json")));
    const Report b = report_from_json(slurp(temp_path("b.json")));
    CHECK(a.profile == Profile::Fast);
    CHECK(a.outcomes.size() == b.outcomes.size());
    CHECK(a.pass == static_cast<int>(a.outcomes.size()));
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
        CHECK(a.outcomes[i].id == b.outcomes[i].id);
        CHECK(a.outcomes[i].category == Category::Limit);
        CHECK(a.outcomes[i].computed == b.outcomes[i].computed);
        CHECK(a.outcomes[i].abs_err == b.outcomes[i].abs_err);
    }
    // serialising what was parsed reproduces the file exactly
    CHECK(report_json(a) == slurp(temp_path("a.json")));
    std::filesystem::remove(temp_path("a.json"));
    std::filesystem::remove(temp_path("b.json"));
}

TEST_CASE("markdown report") {
    CliConfig c;
    c.filter = "id=mm-2147";
    c.md_path = temp_path("r.md");
    REQUIRE(run_cli(c).code == 0);
    const std::string md = slurp(*c.md_path);
    CHECK(md.find("mm-2147") != std::string::npos);
    CHECK(md.find('|') != std::string::npos);
    std::filesystem::remove(*c.md_path);
}

TEST_CASE("argv parsing") {
    const char* argv[] = {"idverify", "list", "--filter", "id=crux-4826"};
    CHECK(main_cli(4, const_cast<char**>(argv)) == 0);
    const char* bad[] = {"idverify", "verify", "--profile", "medium"};
    CHECK(main_cli(4, const_cast<char**>(bad)) == 2);
    const char* none[] = {"idverify"};
    CHECK(main_cli(1, const_cast<char**>(none)) == 2);
}
