// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_SIMNET_CONFIG_HPP
#define SECUREPRUNE_SIMNET_CONFIG_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <secureprune/consensus/params.hpp>

namespace secureprune {

// Flat `key = value` configuration text: one entry per line, `#`
// comments and blank lines ignored, whitespace trimmed. Every lookup
// marks its key as consumed; finish() rejects whatever remains, so
// misspelled keys fail loudly instead of silently using defaults.
class FlatConfig
{
public:
    static FlatConfig parse(const std::string& text);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback);
    uint32_t get_u32(const std::string& key, uint32_t fallback);
    double get_double(const std::string& key, double fallback);
    std::vector<uint32_t> get_u32_list(const std::string& key);
    std::vector<double> get_double_list(const std::string& key);

    // Throws ConfigError naming the first key never consumed.
    void finish() const;

private:
    std::map<std::string, std::string> m_entries;
    std::set<std::string> m_used;
};

enum class Protocol {
    bitcoin,     // never prunes
    coinprune,   // prunes after a reaffirmation-window quorum
    secureprune, // prunes k confirmations after each snapshot
};

std::string protocol_name(Protocol protocol);
Protocol protocol_from_name(const std::string& name);

// The reaffirmation-based baseline: after each snapshot, the next
// `reaffirmation_window` blocks form a voting window; blocks mined by
// cooperating (non-denial) miners count as reaffirmations, and the
// snapshot becomes prunable only if the count reaches the threshold.
struct CoinPruneParams {
    uint32_t reaffirmation_window = 500;
    uint32_t threshold = 300;
    // 1-based miner indices that withhold reaffirmations.
    std::vector<uint32_t> dos_miners;
};

// Network, rate and protocol parameters of one simulation scenario.
struct SimConfig {
    uint32_t n = 20;          // nodes
    uint32_t n_p = 4;         // peers per node (regular random graph)
    double lambda = 1.0 / 600; // block arrivals per second
    double t_p = 0.03;        // per-hop propagation delay, seconds
    double b = 0.25;          // block size, MiB
    double r_down = 10.0;     // download bandwidth, Mbit/s
    double r_v = 0.25;        // validation throughput, Mbit/s
    double t_proofs = 0.35;   // per-block proof verification, seconds
    PruneConfig prune{100, 50};
    uint32_t m = 13;          // miners (node ids 0..m-1)
    std::vector<double> hashrates; // per-miner fractions, sum 1
    double q = 0.45;          // attacker fraction (analysis commands)
    uint64_t seed = 0;
    Protocol protocol = Protocol::secureprune;
    // Simulation runs until the observed chain reaches this height.
    uint32_t duration_blocks = 1000;
    CoinPruneParams coinprune;
    // Heights at which a joining node's synchronization is measured.
    std::vector<uint32_t> join_heights;

    // Throws ConfigError describing the first violated constraint.
    void validate() const;
};

// Protocols to run for a scenario: a single protocol or all three.
struct ScenarioProtocols {
    bool all = false;
    Protocol single = Protocol::secureprune;

    std::vector<Protocol> list() const;
};

// Flat key-value scenario text: one `key = value` per line, `#`
// comments. Unknown keys are rejected. The seed is not a file key; it
// arrives separately (command line).
struct ScenarioFile {
    SimConfig config;
    ScenarioProtocols protocols;
};

ScenarioFile parse_sim_config(const std::string& text);

} // namespace secureprune

#endif // SECUREPRUNE_SIMNET_CONFIG_HPP
