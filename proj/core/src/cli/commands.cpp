// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/cli/commands.hpp>

#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <secureprune/consensus/bootstrap.hpp>
#include <secureprune/consensus/chain_builder.hpp>
#include <secureprune/consensus/confirmations.hpp>
#include <secureprune/consensus/snapshot_io.hpp>
#include <secureprune/simnet/bench.hpp>
#include <secureprune/simnet/metrics.hpp>
#include <secureprune/simnet/sim.hpp>
#include <secureprune/util/errors.hpp>
#include <secureprune/util/fileio.hpp>

namespace secureprune::cli {

namespace {

template <typename Body>
int run_guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "error: E_CONFIG " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: E_MALFORMED " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: E_IO " << e.what() << "\n";
        return 2;
    } catch (const BootstrapError& e) {
        err << "error: E_BOOTSTRAP " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: E_INTERNAL " << e.what() << "\n";
        return 1;
    }
}

std::string read_text_file(const std::string& path)
{
    ByteVec raw = read_file(path);
    return std::string{raw.begin(), raw.end()};
}

std::string fmt(double value, int precision)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << value;
    return s.str();
}

} // namespace

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err)
{
    return run_guarded(err, [&]() -> int {
        if (args.config_path.empty()) throw ConfigError{"simulate: --config is required"};
        ScenarioFile scenario = parse_sim_config(read_text_file(args.config_path));
        if (!args.protocol.empty()) {
            if (args.protocol == "all") {
                scenario.protocols.all = true;
            } else {
                scenario.protocols.all = false;
                scenario.protocols.single = protocol_from_name(args.protocol);
            }
        }

        std::vector<Metrics> runs;
        for (Protocol protocol : scenario.protocols.list()) {
            SimConfig cfg = scenario.config;
            cfg.protocol = protocol;
            cfg.seed = args.seed;
            runs.push_back(run_sim(cfg));
        }

        const Metrics* bitcoin_run = nullptr;
        for (const Metrics& run : runs) {
            if (run.protocol == Protocol::bitcoin) bitcoin_run = &run;
        }
        for (const Metrics& run : runs) {
            out << "protocol " << protocol_name(run.protocol) << ": height "
                << run.storage.back().first << ", final storage "
                << fmt(run.storage.back().second, 2) << " MiB";
            if (!run.prune_heights.empty()) {
                out << ", " << run.prune_heights.size() << " prune events (last at height "
                    << run.prune_heights.back() << ")";
            }
            out << ", mean propagation delay " << fmt(run.mean_delay, 3) << " s\n";
        }
        if (bitcoin_run != nullptr) {
            for (const Metrics& run : runs) {
                if (run.protocol == Protocol::bitcoin) continue;
                double reduction =
                    100.0 * (1.0 - run.storage.back().second / bitcoin_run->storage.back().second);
                out << "storage reduction vs bitcoin: " << protocol_name(run.protocol) << " "
                    << fmt(reduction, 1) << "%\n";
            }
        }
        for (const Metrics& run : runs) {
            for (const auto& [height, seconds] : run.sync_times) {
                out << "sync " << protocol_name(run.protocol) << " at height " << height << ": "
                    << fmt(seconds, 1) << " s\n";
            }
        }
        export_metrics(runs, args.out_dir);
        out << "metrics written to " << args.out_dir << "\n";
        return 0;
    });
}

int cmd_bench_proofs(const BenchProofsArgs& args, std::ostream& out, std::ostream& err)
{
    return run_guarded(err, [&]() -> int {
        std::vector<uint32_t> sizes{10, 50, 100, 200};
        uint32_t trials = 5;
        GroupParams group = GroupParams::rsa2048();
        std::string group_name = "rsa2048";
        if (!args.config_path.empty()) {
            FlatConfig flat = FlatConfig::parse(read_text_file(args.config_path));
            if (flat.has("sizes")) sizes = flat.get_u32_list("sizes");
            trials = flat.get_u32("trials", trials);
            group_name = flat.get_string("group", group_name);
            if (group_name == "rsa2048") {
                group = GroupParams::rsa2048();
            } else if (group_name == "test") {
                group = GroupParams::test_small();
            } else {
                throw ConfigError{"group: expected 'rsa2048' or 'test'"};
            }
            flat.finish();
        }

        std::vector<ProofBenchRow> table = bench_proofs(sizes, group, trials);
        out << "per-block proof verification, " << group_name << " group, mean of " << trials
            << " trials\n";
        for (const ProofBenchRow& row : table) {
            out << "  " << row.size << " spent + " << row.size << " created records: "
                << fmt(row.seconds * 1000.0, 3) << " ms\n";
        }

        Metrics metrics;
        metrics.protocol = Protocol::secureprune;
        metrics.proof_bench = table;
        export_metrics({metrics}, args.out_dir);
        out << "metrics written to " << args.out_dir << "\n";
        return 0;
    });
}

int cmd_confirmations(const ConfirmationsArgs& args, std::ostream& out, std::ostream& err)
{
    return run_guarded(err, [&]() -> int {
        out << confirmations_required(args.q, args.p_target) << "\n";
        return 0;
    });
}

int cmd_export_snapshot(const ExportSnapshotArgs& args, std::ostream& out, std::ostream& err)
{
    return run_guarded(err, [&]() -> int {
        uint32_t blocks = 220;
        ChainBuildConfig build;
        build.params = ChainParams::test_default();
        build.seed = args.seed;
        if (!args.config_path.empty()) {
            FlatConfig flat = FlatConfig::parse(read_text_file(args.config_path));
            blocks = flat.get_u32("blocks", blocks);
            build.txs_per_block = flat.get_u32("txs_per_block", build.txs_per_block);
            build.params.prune.snapshot_interval =
                flat.get_u32("delta_s", build.params.prune.snapshot_interval);
            build.params.prune.confirmations =
                flat.get_u32("k", build.params.prune.confirmations);
            build.params.difficulty_bits =
                flat.get_u32("difficulty_bits", build.params.difficulty_bits);
            std::string group_name = flat.get_string("group", "test");
            if (group_name == "rsa2048") {
                build.params.group = GroupParams::rsa2048();
            } else if (group_name != "test") {
                throw ConfigError{"group: expected 'rsa2048' or 'test'"};
            }
            flat.finish();
        }

        ChainHarness harness{build};
        harness.mine_blocks(blocks);
        const NodeState& node = harness.node(0);
        std::optional<Snapshot> snapshot = node.latest_snapshot();
        if (!snapshot.has_value()) {
            throw ConfigError{"export-snapshot: no snapshot released yet; need blocks >= delta_s (" +
                              std::to_string(build.params.prune.snapshot_interval) + ")"};
        }

        std::filesystem::create_directories(args.out_dir);
        const std::string snapshot_path = args.out_dir + "/snapshot.dat";
        const std::string headers_path = args.out_dir + "/headers.dat";
        write_snapshot_file(snapshot_path, *snapshot);
        HeaderChainFile headers_file{build.params.group.modulus, build.params.group.generator,
                                     build.params.difficulty_bits, node.chain().headers()};
        write_headers_file(headers_path, headers_file);

        out << "chain height " << node.tip_height() << ", snapshot height " << snapshot->height
            << ", " << snapshot->state_copy.size() << " records\n";
        out << "snapshot written to " << snapshot_path << "\n";
        out << "headers written to " << headers_path << "\n";
        return 0;
    });
}

int cmd_verify_snapshot(const VerifySnapshotArgs& args, std::ostream& out, std::ostream& err)
{
    return run_guarded(err, [&]() -> int {
        if (args.snapshot_path.empty() || args.headers_path.empty()) {
            throw ConfigError{"verify-snapshot: --snapshot and --headers are required"};
        }
        HeaderChainFile file = read_headers_file(args.headers_path);
        Snapshot snapshot = read_snapshot_file(args.snapshot_path);
        if (file.headers.empty()) {
            throw ParseError{args.headers_path + ": file contains no headers"};
        }
        for (size_t i = 1; i < file.headers.size(); ++i) {
            if (file.headers[i].prev_hash != header_hash(file.headers[i - 1])) {
                err << "error: E_MISMATCH header chain linkage broken at height " << i << "\n";
                return 1;
            }
            if (!hash_meets_difficulty(header_hash(file.headers[i]), file.difficulty_bits)) {
                err << "error: E_MISMATCH header at height " << i << " fails proof-of-work\n";
                return 1;
            }
        }
        GroupParams group{file.modulus, file.generator, {}};
        std::string detail;
        if (!verify_snapshot(group, snapshot, file.headers, &detail)) {
            err << "error: E_MISMATCH " << detail << "\n";
            return 1;
        }
        out << "ok: snapshot at height " << snapshot.height
            << " matches the header commitment and its recomputed accumulator\n";
        return 0;
    });
}

} // namespace secureprune::cli
