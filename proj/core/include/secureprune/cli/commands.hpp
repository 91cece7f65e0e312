// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_CLI_COMMANDS_HPP
#define SECUREPRUNE_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace secureprune::cli {

// Every command returns a process exit code: 0 on success, 1 when a
// verification or computation legitimately fails, 2 on bad usage
// (missing or malformed configs and inputs). Nonzero paths print a
// single machine-parsable line to `err`: "error: E_<CODE> <detail>".

struct SimulateArgs {
    std::string config_path;
    uint64_t seed = 0;
    std::string out_dir = "out";
    // Optional override of the scenario's protocol selection
    // ("bitcoin", "coinprune", "secureprune" or "all").
    std::string protocol;
};
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);

struct BenchProofsArgs {
    // Optional scenario file with keys: sizes, trials, group.
    std::string config_path;
    std::string out_dir = "out";
};
int cmd_bench_proofs(const BenchProofsArgs& args, std::ostream& out, std::ostream& err);

struct ConfirmationsArgs {
    double q = 0.45;
    double p_target = 1e-4;
};
int cmd_confirmations(const ConfirmationsArgs& args, std::ostream& out, std::ostream& err);

struct ExportSnapshotArgs {
    // Optional chain file with keys: blocks, txs_per_block, delta_s,
    // k, difficulty_bits, group.
    std::string config_path;
    uint64_t seed = 0;
    std::string out_dir = "out";
};
int cmd_export_snapshot(const ExportSnapshotArgs& args, std::ostream& out, std::ostream& err);

struct VerifySnapshotArgs {
    std::string snapshot_path;
    std::string headers_path;
};
int cmd_verify_snapshot(const VerifySnapshotArgs& args, std::ostream& out, std::ostream& err);

} // namespace secureprune::cli

#endif // SECUREPRUNE_CLI_COMMANDS_HPP
