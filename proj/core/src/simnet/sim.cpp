// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/simnet/sim.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <secureprune/util/errors.hpp>

namespace secureprune {

namespace {

// Top 53 bits of one generator draw, offset so the result lies
// strictly inside (0, 1); safe as input to log().
constexpr double MANTISSA_SCALE = 1.0 / 9007199254740992.0; // 2^-53

enum class EventKind : uint8_t {
    mine,     // the network finds a block
    inv,      // dst learns that src holds a block
    getblock, // src is asked to serve a block to dst
    block,    // the full block arrived at dst, validation starts
    addblock, // dst finished validating the block
    join,     // a fresh node synchronizes from dst
};

struct Event {
    double time = 0.0;
    uint64_t seq = 0;
    EventKind kind = EventKind::mine;
    uint32_t src = 0;
    uint32_t dst = 0;
    uint32_t block = 0; // block id, or join height for join events
};

struct EventLater {
    bool operator()(const Event& a, const Event& b) const
    {
        if (a.time != b.time) return a.time > b.time;
        return a.seq > b.seq;
    }
};

struct SimBlock {
    uint32_t parent = 0;
    uint32_t height = 0;
    uint32_t miner = 0;
    double mined_at = 0.0;
    uint32_t arrivals = 0; // nodes that connected the block
};

struct SimNode {
    std::vector<uint32_t> peers;
    std::vector<uint8_t> have;      // indexed by block id
    std::vector<uint8_t> requested; // indexed by block id
    // Validated blocks waiting for their parent, per missing parent.
    std::map<uint32_t, std::vector<uint32_t>> waiting;
    uint32_t tip = 0;
    uint32_t tip_height = 0;
    // Lowest height whose body is still retained on the best chain.
    uint32_t boundary = 0;
    // Next snapshot height whose reaffirmation window is unjudged.
    uint32_t next_window = 0;
};

// Random n_p-regular connected graph via stub matching: repeatedly
// pair two random free stubs, skipping self-loops and duplicate
// edges, restarting on the rare dead end or disconnected outcome.
std::vector<std::vector<uint32_t>> build_topology(uint32_t n, uint32_t n_p, std::mt19937_64& rng)
{
    constexpr int MAX_ATTEMPTS = 200;
    constexpr int MAX_PAIR_TRIES = 400;
    for (int attempt = 0; attempt < MAX_ATTEMPTS; ++attempt) {
        std::vector<uint32_t> stubs;
        stubs.reserve(static_cast<size_t>(n) * n_p);
        for (uint32_t node = 0; node < n; ++node) {
            for (uint32_t s = 0; s < n_p; ++s) stubs.push_back(node);
        }
        std::vector<std::set<uint32_t>> adjacency(n);
        bool stuck = false;
        while (stubs.size() >= 2) {
            bool paired = false;
            for (int t = 0; t < MAX_PAIR_TRIES; ++t) {
                size_t i = rng() % stubs.size();
                size_t j = rng() % stubs.size();
                if (i == j) continue;
                uint32_t u = stubs[i];
                uint32_t v = stubs[j];
                if (u == v || adjacency[u].count(v) != 0) continue;
                adjacency[u].insert(v);
                adjacency[v].insert(u);
                if (i < j) std::swap(i, j);
                stubs[i] = stubs.back();
                stubs.pop_back();
                stubs[j] = stubs.back();
                stubs.pop_back();
                paired = true;
                break;
            }
            if (!paired) {
                stuck = true;
                break;
            }
        }
        if (stuck) continue;

        // Connectivity check.
        std::vector<uint8_t> seen(n, 0);
        std::vector<uint32_t> frontier{0};
        seen[0] = 1;
        uint32_t reached = 1;
        while (!frontier.empty()) {
            uint32_t u = frontier.back();
            frontier.pop_back();
            for (uint32_t v : adjacency[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    frontier.push_back(v);
                }
            }
        }
        if (reached != n) continue;

        std::vector<std::vector<uint32_t>> peers(n);
        for (uint32_t node = 0; node < n; ++node) {
            peers[node].assign(adjacency[node].begin(), adjacency[node].end());
        }
        return peers;
    }
    throw ConfigError{"topology: could not build a connected regular graph for n=" +
                      std::to_string(n) + ", n_p=" + std::to_string(n_p)};
}

class SimEngine {
public:
    explicit SimEngine(const SimConfig& config)
        : m_cfg(config), m_rng(config.seed)
    {
        m_join_heights = m_cfg.join_heights;
        std::sort(m_join_heights.begin(), m_join_heights.end());
        m_join_heights.erase(std::unique(m_join_heights.begin(), m_join_heights.end()),
                             m_join_heights.end());

        m_is_dos.assign(m_cfg.m, 0);
        if (m_cfg.protocol == Protocol::coinprune) {
            for (uint32_t idx : m_cfg.coinprune.dos_miners) m_is_dos[idx - 1] = 1;
        }

        std::vector<std::vector<uint32_t>> peers = build_topology(m_cfg.n, m_cfg.n_p, m_rng);
        m_nodes.resize(m_cfg.n);
        for (uint32_t node = 0; node < m_cfg.n; ++node) {
            m_nodes[node].peers = std::move(peers[node]);
            m_nodes[node].have.assign(1, 1); // genesis
            m_nodes[node].requested.assign(1, 1);
            m_nodes[node].next_window = m_cfg.prune.snapshot_interval;
        }
        m_blocks.push_back(SimBlock{0, 0, 0, 0.0, m_cfg.n});
        // The observer is the last node: a non-miner whenever n > m.
        m_observer = m_cfg.n - 1;
        m_metrics.protocol = m_cfg.protocol;
        m_metrics.miner_blocks.assign(m_cfg.m, 0);
    }

    Metrics run()
    {
        push(exp_interval(), EventKind::mine, 0, 0, 0);
        while (!m_queue.empty()) {
            Event ev = m_queue.top();
            m_queue.pop();
            dispatch(ev);
            if (m_nodes[m_observer].tip_height >= m_cfg.duration_blocks && m_pending_joins == 0) {
                break;
            }
        }
        if (m_nodes[m_observer].tip_height < m_cfg.duration_blocks) {
            throw std::logic_error{"run_sim: event queue drained before the target height"};
        }
        if (!m_delays.empty()) {
            double sum = 0.0;
            double max = 0.0;
            for (double d : m_delays) {
                sum += d;
                max = std::max(max, d);
            }
            m_metrics.mean_delay = sum / static_cast<double>(m_delays.size());
            m_metrics.max_delay = max;
        }
        return std::move(m_metrics);
    }

private:
    const SimConfig m_cfg;
    std::mt19937_64 m_rng;
    std::priority_queue<Event, std::vector<Event>, EventLater> m_queue;
    uint64_t m_next_seq = 0;
    std::vector<SimNode> m_nodes;
    std::vector<SimBlock> m_blocks;
    std::vector<uint8_t> m_is_dos;
    uint32_t m_observer = 0;
    Metrics m_metrics;
    uint32_t m_recorded_height = 0;
    std::vector<uint32_t> m_join_heights;
    size_t m_next_join = 0;
    uint32_t m_pending_joins = 0;
    std::vector<double> m_delays;

    double transfer_seconds() const { return 8.0 * m_cfg.b / m_cfg.r_down; }

    double validation_seconds() const
    {
        double seconds = 8.0 * m_cfg.b / m_cfg.r_v;
        if (m_cfg.protocol == Protocol::secureprune) seconds += m_cfg.t_proofs;
        return seconds;
    }

    double uniform01()
    {
        return (static_cast<double>(m_rng() >> 11) + 0.5) * MANTISSA_SCALE;
    }

    double exp_interval() { return -std::log(uniform01()) / m_cfg.lambda; }

    uint32_t pick_miner()
    {
        double u = uniform01();
        double cumulative = 0.0;
        for (uint32_t miner = 0; miner + 1 < m_cfg.m; ++miner) {
            cumulative += m_cfg.hashrates[miner];
            if (u < cumulative) return miner;
        }
        return m_cfg.m - 1;
    }

    void push(double time, EventKind kind, uint32_t src, uint32_t dst, uint32_t block)
    {
        m_queue.push(Event{time, m_next_seq++, kind, src, dst, block});
    }

    void dispatch(const Event& ev)
    {
        switch (ev.kind) {
        case EventKind::mine: handle_mine(ev); break;
        case EventKind::inv: handle_inv(ev); break;
        case EventKind::getblock: handle_getblock(ev); break;
        case EventKind::block: handle_block(ev); break;
        case EventKind::addblock: handle_addblock(ev); break;
        case EventKind::join: handle_join(ev); break;
        }
    }

    void handle_mine(const Event& ev)
    {
        uint32_t winner = pick_miner();
        ++m_metrics.miner_blocks[winner];
        uint32_t parent = m_nodes[winner].tip;
        uint32_t id = static_cast<uint32_t>(m_blocks.size());
        m_blocks.push_back(SimBlock{parent, m_blocks[parent].height + 1, winner, ev.time, 0});
        for (SimNode& node : m_nodes) {
            node.have.push_back(0);
            node.requested.push_back(0);
        }
        m_nodes[winner].requested[id] = 1;
        connect_block(winner, id, ev.time);
        push(ev.time + exp_interval(), EventKind::mine, 0, 0, 0);
    }

    void handle_inv(const Event& ev)
    {
        SimNode& node = m_nodes[ev.dst];
        if (node.have[ev.block] || node.requested[ev.block]) return;
        node.requested[ev.block] = 1;
        push(ev.time + m_cfg.t_p, EventKind::getblock, ev.dst, ev.src, ev.block);
    }

    void handle_getblock(const Event& ev)
    {
        // ev.dst holds the block (it announced it); ev.src asked.
        if (!m_nodes[ev.dst].have[ev.block]) return;
        push(ev.time + m_cfg.t_p + transfer_seconds(), EventKind::block, ev.dst, ev.src, ev.block);
    }

    void handle_block(const Event& ev)
    {
        push(ev.time + validation_seconds(), EventKind::addblock, ev.src, ev.dst, ev.block);
    }

    void handle_addblock(const Event& ev)
    {
        SimNode& node = m_nodes[ev.dst];
        if (node.have[ev.block]) return;
        uint32_t parent = m_blocks[ev.block].parent;
        if (!node.have[parent]) {
            node.waiting[parent].push_back(ev.block);
            return;
        }
        connect_block(ev.dst, ev.block, ev.time);
    }

    void handle_join(const Event& ev)
    {
        const SimNode& peer = m_nodes[ev.dst];
        uint32_t join_height = ev.block;
        uint32_t bodies = join_height - peer.boundary;
        double per_block = m_cfg.t_p + transfer_seconds() + 8.0 * m_cfg.b / m_cfg.r_v;
        if (m_cfg.protocol == Protocol::secureprune) per_block += m_cfg.t_proofs;
        m_metrics.sync_times.emplace_back(join_height, bodies * per_block);
        --m_pending_joins;
    }

    void connect_block(uint32_t node_id, uint32_t block_id, double time)
    {
        SimNode& node = m_nodes[node_id];
        node.have[block_id] = 1;
        SimBlock& block = m_blocks[block_id];
        ++block.arrivals;
        if (block.arrivals == m_cfg.n) m_delays.push_back(time - block.mined_at);

        for (uint32_t peer : node.peers) {
            push(time + m_cfg.t_p, EventKind::inv, node_id, peer, block_id);
        }

        if (block.height > node.tip_height) {
            node.tip = block_id;
            node.tip_height = block.height;
            update_pruning(node, node_id);
            if (node_id == m_observer) record_observer(time);
        }

        auto it = node.waiting.find(block_id);
        if (it != node.waiting.end()) {
            std::vector<uint32_t> children = std::move(it->second);
            node.waiting.erase(it);
            for (uint32_t child : children) connect_block(node_id, child, time);
        }
    }

    void update_pruning(SimNode& node, uint32_t node_id)
    {
        const uint32_t interval = m_cfg.prune.snapshot_interval;
        if (m_cfg.protocol == Protocol::secureprune) {
            // A snapshot is released at every multiple of the
            // interval; bodies below the latest snapshot are dropped
            // once it has k confirmations on top of it.
            uint32_t snapshot = (node.tip_height / interval) * interval;
            if (snapshot > 0 && node.tip_height >= snapshot + m_cfg.prune.confirmations &&
                node.boundary < snapshot) {
                node.boundary = snapshot;
                if (node_id == m_observer) m_metrics.prune_heights.push_back(node.tip_height);
            }
        } else if (m_cfg.protocol == Protocol::coinprune) {
            const uint32_t window = m_cfg.coinprune.reaffirmation_window;
            while (node.next_window + window <= node.tip_height) {
                uint32_t snapshot = node.next_window;
                node.next_window += interval;
                uint32_t cursor = node.tip;
                while (m_blocks[cursor].height > snapshot + window) {
                    cursor = m_blocks[cursor].parent;
                }
                uint32_t reaffirmations = 0;
                while (m_blocks[cursor].height > snapshot) {
                    if (!m_is_dos[m_blocks[cursor].miner]) ++reaffirmations;
                    cursor = m_blocks[cursor].parent;
                }
                if (reaffirmations >= m_cfg.coinprune.threshold && node.boundary < snapshot) {
                    node.boundary = snapshot;
                    if (node_id == m_observer) m_metrics.prune_heights.push_back(node.tip_height);
                }
            }
        }
    }

    void record_observer(double time)
    {
        SimNode& node = m_nodes[m_observer];
        while (m_recorded_height < node.tip_height) {
            ++m_recorded_height;
            double retained_mib = static_cast<double>(node.tip_height - node.boundary + 1) * m_cfg.b;
            m_metrics.storage.emplace_back(m_recorded_height, retained_mib);
            while (m_next_join < m_join_heights.size() &&
                   m_join_heights[m_next_join] == m_recorded_height) {
                push(time, EventKind::join, m_observer, m_observer, m_recorded_height);
                ++m_pending_joins;
                ++m_next_join;
            }
        }
    }
};

} // namespace

Metrics run_sim(const SimConfig& config)
{
    config.validate();
    return SimEngine{config}.run();
}

Metrics coinprune_baseline(const SimConfig& config, const CoinPruneParams& params)
{
    SimConfig cfg = config;
    cfg.protocol = Protocol::coinprune;
    cfg.coinprune = params;
    return run_sim(cfg);
}

double simulate_join(const SimConfig& config, uint32_t join_height)
{
    if (join_height < 1) throw ConfigError{"simulate_join: join height must be positive"};
    SimConfig cfg = config;
    cfg.duration_blocks = join_height;
    cfg.join_heights = {join_height};
    Metrics metrics = run_sim(cfg);
    if (metrics.sync_times.size() != 1) {
        throw std::logic_error{"simulate_join: expected exactly one measurement"};
    }
    return metrics.sync_times.front().second;
}

double sync_time_analytic(Protocol protocol, uint32_t n_blocks, const SimConfig& config)
{
    double n = static_cast<double>(n_blocks);
    double megabits = 8.0 * config.b;
    double seconds = n * (megabits / config.r_down + config.t_p) + n * (megabits / config.r_v);
    if (protocol == Protocol::secureprune) seconds += n * config.t_proofs;
    return seconds;
}

} // namespace secureprune
