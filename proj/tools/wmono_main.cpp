#include "wmono/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"wmono - monogamy bound evaluation for multiqubit W-class states"};
    app.require_subcommand(1);

    wmono::cli::EvaluateOptions eval_opts;
    auto* eval = app.add_subcommand("evaluate", "Evaluate inequalities on a described state");
    eval->add_option("file", eval_opts.state_file, "state description file")->required();
    eval->add_option("--ids", eval_opts.ids, "inequality ids to evaluate (default: all)");
    eval->add_option("--x", eval_opts.x_values, "exponents for >=-type bounds (>= 2)");
    eval->add_option("--y", eval_opts.y_values, "exponents for <-type bounds (< 0)");
    eval->add_flag("--oracle-lhs", eval_opts.oracle_lhs,
                   "estimate sub-block assistance LHS by decomposition search");
    eval->add_option("--budget", eval_opts.oracle_budget.starts, "oracle starts for --oracle-lhs");
    std::uint64_t eval_seed = 0;
    auto* eval_seed_opt = eval->add_option("--seed", eval_seed, "seed for --oracle-lhs");

    wmono::cli::FigureOptions fig_opts;
    auto* fig = app.add_subcommand("figure", "Write bound-comparison curve data as CSV");
    fig->add_option("which", fig_opts.which, "1 (x >= 2 lower bounds) or 2 (y < 0 upper bounds)")
        ->required()
        ->check(CLI::Range(1, 2));
    double fig_from = 0, fig_to = 0, fig_step = 0;
    auto* from_opt = fig->add_option("--from", fig_from, "grid start");
    auto* to_opt = fig->add_option("--to", fig_to, "grid end");
    auto* step_opt = fig->add_option("--step", fig_step, "grid step");
    fig->add_option("--out", fig_opts.out_path, "output CSV path")->required();

    wmono::cli::VerifyOptions verify_opts;
    auto* ver = app.add_subcommand("verify", "Randomized verification of every inequality");
    std::uint64_t verify_seed = 0;
    auto* verify_seed_opt = ver->add_option("--seed", verify_seed, "master seed (default WMONO_SEED or 42)");
    ver->add_option("--trials", verify_opts.trials, "number of sampled states");
    ver->add_option("--min-qubits", verify_opts.min_qubits, "smallest sampled register");
    ver->add_option("--max-qubits", verify_opts.max_qubits, "largest sampled register (<= 12)");
    ver->add_option("--ids", verify_opts.ids, "restrict to these inequality ids");
    std::string verify_csv;
    auto* csv_opt = ver->add_option("--csv", verify_csv, "also write the summary CSV here");

    wmono::cli::OracleOptions oracle_opts;
    auto* ora = app.add_subcommand("oracle", "Cross-validate closed forms against the decomposition search");
    ora->add_option("--measure", oracle_opts.measures,
                    "measures to check: concurrence coa cren crenoa block (default: all)");
    ora->add_option("--rank", oracle_opts.rank, "rank of sampled two-qubit states (1..4)");
    ora->add_option("--trials", oracle_opts.trials, "states per measure");
    ora->add_option("--budget", oracle_opts.budget.starts, "random starts per search");
    std::uint64_t oracle_seed = 0;
    auto* oracle_seed_opt = ora->add_option("--seed", oracle_seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : wmono::cli::kExitUsage;
    }

    try {
        if (*eval) {
            if (!eval_seed_opt->empty()) eval_opts.seed = eval_seed;
            return wmono::cli::cmd_evaluate(eval_opts, std::cout, std::cerr);
        }
        if (*fig) {
            if (!from_opt->empty()) fig_opts.from = fig_from;
            if (!to_opt->empty()) fig_opts.to = fig_to;
            if (!step_opt->empty()) fig_opts.step = fig_step;
            return wmono::cli::cmd_figure(fig_opts, std::cout, std::cerr);
        }
        if (*ver) {
            if (!verify_seed_opt->empty()) verify_opts.seed = verify_seed;
            if (!csv_opt->empty()) verify_opts.csv_path = verify_csv;
            return wmono::cli::cmd_verify(verify_opts, std::cout, std::cerr);
        }
        if (*ora) {
            if (!oracle_seed_opt->empty()) oracle_opts.seed = oracle_seed;
            return wmono::cli::cmd_oracle(oracle_opts, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return wmono::cli::kExitUsage;
    }
    return wmono::cli::kExitUsage;
}
