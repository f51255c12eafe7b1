// Command-line front end: scenario runs, parameter sweeps and the bundled
// example catalog. Exit codes: 0 success, 2 config error, 3 physics error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gemq/builtin_examples.hpp"
#include "gemq/runner.hpp"

namespace fs = std::filesystem;
using namespace gemq;
using namespace gemq::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPhysics = 3;

struct ScenarioArgs {
    std::string config_path;
    std::string out_dir = "gemq-out";
    std::string convention;
    std::vector<std::string> overrides;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ScenarioConfig load_config(ScenarioKind kind, const ScenarioArgs& args) {
    ScenarioConfig cfg;
    if (args.config_path.empty()) {
        cfg = parse_config_text(default_example(kind).config_json);
    } else {
        cfg = parse_config_text(read_file(args.config_path));
    }
    if (cfg.kind != kind)
        throw parse_error("config '" + cfg.name + "' is a " + to_string(cfg.kind) +
                          " scenario, but the " + to_string(kind) + " subcommand was invoked");
    if (!args.convention.empty()) cfg.convention = convention_from_string(args.convention);
    for (const auto& assignment : args.overrides) apply_override(cfg, assignment);
    return cfg;
}

int run_and_write(const ScenarioConfig& cfg, const std::string& out_dir) {
    const RunResult result = run_scenario(cfg);
    const RunArtifacts paths = write_artifacts(result, out_dir);
    std::cout << render_report(result);
    std::cout << "\nwrote " << paths.report.string() << ", " << paths.csv.string() << ", "
              << paths.meta.string() << "\n";
    for (const auto& claim : result.claims) {
        if (!claim.agree) {
            // disagreement is reported, not an error: the gap is the result
            std::cout << "note: claim disagreed: " << claim.claim.label << "\n";
        }
    }
    return kExitOk;
}

void attach_scenario_command(CLI::App& app, ScenarioKind kind, const std::string& description,
                             std::vector<std::pair<ScenarioKind, ScenarioArgs>>& requested) {
    auto* cmd = app.add_subcommand(to_string(kind), description);
    auto args = std::make_shared<ScenarioArgs>();
    cmd->add_option("--config", args->config_path, "scenario config file (JSON)");
    cmd->add_option("--out", args->out_dir, "output directory for report.txt/data.csv");
    cmd->add_option("--convention", args->convention,
                    "GEM constant convention: paper_literal or maxwell_consistent");
    cmd->add_option("--set", args->overrides, "override, e.g. --set \"mass=2e-12 kg\"");
    cmd->callback([&requested, kind, args] { requested.emplace_back(kind, *args); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak-field gravito-electromagnetism calculator and entanglement witness "
                 "simulator"};
    app.require_subcommand(1);

    std::vector<std::pair<ScenarioKind, ScenarioArgs>> requested;
    attach_scenario_command(app, ScenarioKind::field,
                            "two-mass electric/magnetic-like force estimates", requested);
    attach_scenario_command(app, ScenarioKind::uncertainty,
                            "confinement-scale uncertainty product bounds", requested);
    attach_scenario_command(app, ScenarioKind::witness,
                            "two masses coupled to one quantized field mode", requested);
    attach_scenario_command(app, ScenarioKind::sagnac,
                            "rotor spun at a superposition of two rates", requested);

    auto* examples_cmd = app.add_subcommand("examples", "bundled example scenarios");
    std::string write_dir;
    std::string run_name;
    std::string run_out = "gemq-out";
    examples_cmd->add_option("--write", write_dir, "write every bundled config to a directory");
    examples_cmd->add_option("--run", run_name, "run one bundled example by name");
    examples_cmd->add_option("--out", run_out, "output directory for --run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (examples_cmd->parsed()) {
            if (!run_name.empty()) {
                const auto& ex = find_builtin_example(run_name);
                return run_and_write(parse_config_text(ex.config_json), run_out);
            }
            if (!write_dir.empty()) {
                fs::create_directories(write_dir);
                for (const auto& ex : builtin_examples()) {
                    std::ofstream out(fs::path(write_dir) / (ex.name + ".json"),
                                      std::ios::binary);
                    out << ex.config_json << "\n";
                }
                std::cout << "wrote " << builtin_examples().size() << " configs to " << write_dir
                          << "\n";
                return kExitOk;
            }
            for (const auto& ex : builtin_examples()) {
                const auto cfg = parse_config_text(ex.config_json);
                std::cout << ex.name << "  (" << to_string(cfg.kind) << ")  " << cfg.description
                          << "\n";
            }
            return kExitOk;
        }

        for (const auto& [kind, args] : requested)
            return run_and_write(load_config(kind, args), args.out_dir);
        return kExitConfig; // no subcommand resolved
    } catch (const parse_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const dimension_error& e) {
        std::cerr << "physics error: " << e.what() << "\n";
        return kExitPhysics;
    } catch (const domain_error& e) {
        std::cerr << "physics error: " << e.what() << "\n";
        return kExitPhysics;
    }
}
