// End-to-end checks of the gemq binary: exit codes, artifacts, determinism.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string cli = GEMQ_CLI_PATH;

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "gemq_cli_stdout.txt";
    const std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int raw = std::system(cmd.c_str());
    CommandResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("examples subcommand lists the five bundled scenarios") {
    const auto r = run_cli("examples");
    CHECK(r.exit_code == 0);
    for (const char* name : {"micron-em-unity", "nanogram-forces", "unity-scale",
                             "witness-revival", "sagnac-maximal"})
        CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("every bundled example runs with exit 0 and writes artifacts") {
    for (const char* name : {"micron-em-unity", "nanogram-forces", "unity-scale",
                             "witness-revival", "sagnac-maximal"}) {
        const fs::path out = fresh_dir(std::string("gemq_ex_") + name);
        const auto r = run_cli(std::string("examples --run ") + name + " --out \"" +
                               out.string() + "\"");
        INFO(name << ": " << r.output);
        CHECK(r.exit_code == 0);
        CHECK(fs::exists(out / "report.txt"));
        CHECK(fs::exists(out / "data.csv"));
        CHECK(fs::exists(out / "run_meta.txt"));
    }
}

TEST_CASE("repeated runs produce byte-identical data files") {
    const fs::path a = fresh_dir("gemq_det_a");
    const fs::path b = fresh_dir("gemq_det_b");
    REQUIRE(run_cli("examples --run witness-revival --out \"" + a.string() + "\"").exit_code ==
            0);
    REQUIRE(run_cli("examples --run witness-revival --out \"" + b.string() + "\"").exit_code ==
            0);
    CHECK(slurp(a / "report.txt") == slurp(b / "report.txt"));
    CHECK(slurp(a / "data.csv") == slurp(b / "data.csv"));
}

TEST_CASE("malformed unit strings exit 2 and name the field") {
    const fs::path cfg = fs::temp_directory_path() / "gemq_bad_unit.json";
    std::ofstream(cfg) << R"({"scenario": "field", "params": {"mass": "1e-12 kgg"}})";
    const auto r = run_cli("field --config \"" + cfg.string() + "\"");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("mass") != std::string::npos);
    CHECK(r.output.find("kgg") != std::string::npos);
}

TEST_CASE("physics domain violations exit 3") {
    const fs::path out = fresh_dir("gemq_fast");
    const auto r = run_cli("field --set \"speed=3e8 m/s\" --out \"" + out.string() + "\"");
    CHECK(r.exit_code == 3);
}

TEST_CASE("config kind must match the subcommand") {
    const fs::path cfg = fs::temp_directory_path() / "gemq_kind.json";
    std::ofstream(cfg) << R"({"scenario": "witness"})";
    const auto r = run_cli("field --config \"" + cfg.string() + "\"");
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing config files exit 2") {
    const auto r = run_cli("field --config /nonexistent/nowhere.json");
    CHECK(r.exit_code == 2);
}

TEST_CASE("scenario subcommands run their default configs") {
    for (const char* sub : {"field", "uncertainty", "witness", "sagnac"}) {
        const fs::path out = fresh_dir(std::string("gemq_default_") + sub);
        const auto r = run_cli(std::string(sub) + " --out \"" + out.string() + "\"");
        INFO(sub << ": " << r.output);
        CHECK(r.exit_code == 0);
        CHECK(fs::exists(out / "report.txt"));
    }
}

TEST_CASE("convention flag switches the reported convention") {
    const fs::path out = fresh_dir("gemq_conv");
    const auto r =
        run_cli("field --convention paper_literal --out \"" + out.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(slurp(out / "report.txt").find("convention: paper_literal") != std::string::npos);
}

TEST_CASE("examples --write dumps the bundled configs") {
    const fs::path dir = fresh_dir("gemq_written");
    REQUIRE(run_cli("examples --write \"" + dir.string() + "\"").exit_code == 0);
    for (const char* name : {"micron-em-unity", "nanogram-forces", "unity-scale",
                             "witness-revival", "sagnac-maximal"})
        CHECK(fs::exists(dir / (std::string(name) + ".json")));

    // a written config runs through --config unchanged
    const fs::path out = fresh_dir("gemq_written_run");
    const auto r = run_cli("witness --config \"" + (dir / "witness-revival.json").string() +
                           "\" --out \"" + out.string() + "\"");
    CHECK(r.exit_code == 0);
}
