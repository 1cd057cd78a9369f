#include "artifacts.hpp"
#include "experiments.hpp"
#include "oracles.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"nippas: residual-driven adaptive surrogate construction"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out";
    long seed_override = -1;
    auto* run_cmd = app.add_subcommand("run", "run one adaptive sampling configuration");
    run_cmd->add_option("--config", config_path, "INI run configuration")->required();
    run_cmd->add_option("--out-dir", out_dir, "output directory");
    run_cmd->add_option("--seed", seed_override, "override [run] seed");

    nippas::cli::ExperimentOptions exp_opts;
    std::string experiment_name;
    auto* exp_cmd = app.add_subcommand("experiment", "reproduce a built-in study");
    exp_cmd->add_option("name", experiment_name, "study name")->required();
    exp_cmd->add_option("--out-dir", exp_opts.out_dir, "output directory");
    exp_cmd->add_flag("--full-scale", exp_opts.full_scale,
                      "production resolutions and full ensembles");
    exp_cmd->add_option("--pdfs", exp_opts.pdf_count, "ensemble size for uad-pdf-study");
    exp_cmd->add_option("--seed", exp_opts.seed, "base seed");

    std::string surrogate_path, points_path, eval_out = "values.csv";
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a surrogate dump at points");
    eval_cmd->add_option("--surrogate", surrogate_path, "surrogate dump file")->required();
    eval_cmd->add_option("--points", points_path, "CSV of evaluation points")->required();
    eval_cmd->add_option("--out", eval_out, "output CSV");

    std::string suite;
    auto* oracle_cmd = app.add_subcommand("oracle", "run a brute-force oracle suite");
    oracle_cmd->add_option("suite", suite, "greville | theorem1 | quadrature | pso")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return nippas::cli::run_command(config_path, out_dir, seed_override);
        if (*exp_cmd) return nippas::cli::experiment_command(experiment_name, exp_opts);
        if (*eval_cmd)
            return nippas::cli::eval_command(surrogate_path, points_path, eval_out);
        if (*oracle_cmd) return nippas::cli::oracle_command(suite);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
