// cbjc — command-line front end for the reproduction runs.
//
//   cbjc <decay|quasidark|spectrum|oracle-compare> [--config PATH] [--out DIR]
//        [--engine NAME]... [--no-interference] [--set key=value]...
//
// Exit code 0 on success; otherwise one line "error kind=<kind> message=<text>"
// on stderr.

#include "cbjc/config.hpp"
#include "cbjc/errors.hpp"
#include "cbjc/experiments.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

struct Options {
    std::string config_path;
    std::string out;
    std::vector<std::string> engines;
    std::vector<std::string> overrides;
    bool no_interference{false};
};

std::string one_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

int fail(const std::string& kind, const std::string& message, int code = 1) {
    std::cerr << "error kind=" << kind << " message=" << one_line(message) << '\n';
    return code;
}

cbjc::ExperimentConfig resolve(const Options& opt) {
    cbjc::ExperimentConfig config;
    if (!opt.config_path.empty()) config = cbjc::load_config(opt.config_path);
    for (const auto& kv : opt.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw cbjc::ConfigurationError("--set expects key=value, got '" + kv + "'");
        config.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!opt.out.empty()) config.run.output = opt.out;
    if (opt.no_interference) config.run.interference = false;
    if (!opt.engines.empty()) {
        config.run.engines.clear();
        for (const auto& e : opt.engines) config.run.engines.push_back(cbjc::parse_engine(e));
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Common-bath Jaynes-Cummings master equation runs"};
    app.require_subcommand(1);

    Options opt;
    using Runner = std::function<cbjc::RunReport(const cbjc::ExperimentConfig&)>;
    const std::map<std::string, std::pair<std::string, Runner>> commands{
        {"decay", {"Time evolution of the one-excitation decay for each engine", cbjc::run_decay}},
        {"quasidark", {"Long-time quasi-dark state at lambda = 0", cbjc::run_quasidark}},
        {"spectrum", {"Steady-state transmission spectrum with and without interference", cbjc::run_spectrum}},
        {"oracle-compare", {"Master equation against the exact and iteration oracles", cbjc::run_oracle_compare}},
    };
    std::map<CLI::App*, Runner> runners;
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->add_option("--config", opt.config_path, "Config file (section.key = value)");
        sub->add_option("--out", opt.out, "Output directory (overrides run.output)");
        sub->add_option("--engine", opt.engines, "Engine: common-bath, traditional, no-interference, exact, iteration");
        sub->add_flag("--no-interference", opt.no_interference, "Drop the cross-channel terms");
        sub->add_option("--set", opt.overrides, "Override one config key (key=value)");
        runners.emplace(sub, entry.second);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 2);
    }

    try {
        const cbjc::ExperimentConfig config = resolve(opt);
        const Runner& run = runners.at(app.get_subcommands().front());
        const cbjc::RunReport report = run(config);
        for (const auto& line : report.summary) std::cout << line << '\n';
        for (const auto& f : report.files) std::cout << "wrote " << f.string() << '\n';
        for (const auto& w : report.warnings) std::cerr << "warning: " << one_line(w) << '\n';
        return 0;
    } catch (const cbjc::Error& e) {
        return fail(e.kind(), e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
}
