// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <iostream>

#include <CLI11.hpp>

#include <secureprune/cli/commands.hpp>

int main(int argc, char** argv)
{
    using namespace secureprune::cli;

    CLI::App app{"secureprune: accumulator-committed UTXO chain with secure pruning"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    CLI::App* sim = app.add_subcommand(
        "simulate", "Run the discrete-event network simulation for a scenario config");
    sim->add_option("--config", sim_args.config_path, "Scenario config file")->required();
    sim->add_option("--seed", sim_args.seed, "Simulation seed (default 0)");
    sim->add_option("--out", sim_args.out_dir, "Directory for CSV metrics (default ./out)");
    sim->add_option("--protocol", sim_args.protocol,
                    "Override the scenario protocol: bitcoin, coinprune, secureprune or all");

    BenchProofsArgs bench_args;
    CLI::App* bench = app.add_subcommand(
        "bench-proofs", "Measure per-block accumulator proof verification times");
    bench->add_option("--config", bench_args.config_path,
                      "Optional bench config (keys: sizes, trials, group)");
    bench->add_option("--out", bench_args.out_dir, "Directory for CSV metrics (default ./out)");

    ConfirmationsArgs conf_args;
    CLI::App* conf = app.add_subcommand(
        "confirmations", "Confirmation depth bounding an attacker's catch-up probability");
    conf->add_option("--q", conf_args.q, "Attacker hashrate fraction (default 0.45)");
    conf->add_option("--p-target", conf_args.p_target,
                     "Acceptable catch-up probability (default 1e-4)");

    ExportSnapshotArgs export_args;
    CLI::App* exp = app.add_subcommand(
        "export-snapshot", "Mine a deterministic chain and export its snapshot and headers");
    exp->add_option("--config", export_args.config_path,
                    "Optional chain config (keys: blocks, txs_per_block, delta_s, k, "
                    "difficulty_bits, group)");
    exp->add_option("--seed", export_args.seed, "Chain build seed (default 0)");
    exp->add_option("--out", export_args.out_dir, "Output directory (default ./out)");

    VerifySnapshotArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify-snapshot", "Check a snapshot file against a header-chain file");
    verify->add_option("--snapshot", verify_args.snapshot_path, "Snapshot file")->required();
    verify->add_option("--headers", verify_args.headers_path, "Header-chain file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help was requested
        std::cerr << "error: E_USAGE " << e.what() << "\n";
        return 2;
    }

    if (sim->parsed()) return cmd_simulate(sim_args, std::cout, std::cerr);
    if (bench->parsed()) return cmd_bench_proofs(bench_args, std::cout, std::cerr);
    if (conf->parsed()) return cmd_confirmations(conf_args, std::cout, std::cerr);
    if (exp->parsed()) return cmd_export_snapshot(export_args, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify_snapshot(verify_args, std::cout, std::cerr);
    std::cerr << "error: E_USAGE no command given\n";
    return 2;
}
