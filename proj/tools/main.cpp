#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polydual/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"polydual: exact polyhedral convex duality, Farkas certificates, and diagnostics"};
    app.require_subcommand(1);

    polydual::cli::Options options;
    std::string problem_path;

    auto add_common = [&](CLI::App* cmd, bool with_file) {
        if (with_file)
            cmd->add_option("problem", problem_path, "problem file (JSON)")->required();
        cmd->add_flag("--json", options.json, "print the machine-readable report");
        cmd->add_flag("--text", "print the human-readable report (default)");
        cmd->add_flag("--verify", options.verify, "re-verify emitted certificates");
        cmd->add_option("--seed", options.seed, "seed for randomized checks");
        cmd->add_option("--max-generators", options.max_generators, "double description generator cap");
        cmd->add_option("--max-subsets", options.max_subsets, "subset enumeration cap");
        cmd->add_option("--out", [&](const std::vector<std::string>& v) {
            options.out_path = v.front();
            return true;
        }, "write the JSON report to a file");
    };

    const char* commands[] = {"check", "certify", "consistency", "fm",
                              "hidden", "optimal", "kkt", "diagnose"};
    for (const char* name : commands) add_common(app.add_subcommand(name), true);
    add_common(app.add_subcommand("selftest", "run the bundled golden suite"), false);

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    polydual::cli::Result result = sub->get_name() == "selftest"
        ? polydual::cli::run_selftest(options)
        : polydual::cli::run_command(sub->get_name(), problem_path, options);

    if (result.exit_code == 0 || !result.json_text.empty()) {
        std::cout << (options.json ? result.json_text : result.human_text);
    } else {
        std::cerr << result.human_text;
    }
    return result.exit_code;
}
