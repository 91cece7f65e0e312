// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_SIMNET_METRICS_HPP
#define SECUREPRUNE_SIMNET_METRICS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <secureprune/simnet/config.hpp>

namespace secureprune {

struct ProofBenchRow {
    uint32_t size = 0;      // spent/created records per block
    double seconds = 0.0;   // mean verification time
    bool operator==(const ProofBenchRow&) const = default;
};

// Everything one simulation run (or bench run) measures.
struct Metrics {
    Protocol protocol = Protocol::bitcoin;
    // (height, retained MiB at the observer once its chain first
    // reached that height); one row per height 1..duration_blocks.
    std::vector<std::pair<uint32_t, double>> storage;
    // Chain heights at which the observer discarded block bodies.
    std::vector<uint32_t> prune_heights;
    // (join height, measured synchronization seconds).
    std::vector<std::pair<uint32_t, double>> sync_times;
    // Block propagation: delay from mining until every node holds the
    // block, aggregated over all fully propagated blocks.
    double mean_delay = 0.0;
    double max_delay = 0.0;
    // Blocks mined per miner over the whole run, stale blocks
    // included: the realized hashrate allocation.
    std::vector<uint64_t> miner_blocks;
    // Proof verification bench rows (bench command only).
    std::vector<ProofBenchRow> proof_bench;

    bool operator==(const Metrics&) const = default;
};

// Writes storage_series.csv, prune_events.csv, sync_times.csv,
// delays.csv, miner_blocks.csv and proof_bench.csv under `out_dir`
// (created if absent). Each file is written atomically; identical
// metrics produce byte-identical files. Layouts are documented in
// docs/FORMATS.md.
void export_metrics(const std::vector<Metrics>& runs, const std::string& out_dir);

// Reads the files written by export_metrics back into one Metrics per
// protocol. Throws ParseError on malformed rows, IoError on missing
// files.
std::vector<Metrics> import_metrics(const std::string& out_dir);

} // namespace secureprune

#endif // SECUREPRUNE_SIMNET_METRICS_HPP
