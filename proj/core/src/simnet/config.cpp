// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/simnet/config.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <secureprune/util/errors.hpp>

namespace secureprune {

std::string protocol_name(Protocol protocol)
{
    switch (protocol) {
    case Protocol::bitcoin: return "bitcoin";
    case Protocol::coinprune: return "coinprune";
    case Protocol::secureprune: return "secureprune";
    }
    throw std::logic_error{"protocol_name: unknown protocol"};
}

Protocol protocol_from_name(const std::string& name)
{
    if (name == "bitcoin") return Protocol::bitcoin;
    if (name == "coinprune") return Protocol::coinprune;
    if (name == "secureprune") return Protocol::secureprune;
    throw ConfigError{"unknown protocol '" + name + "' (expected bitcoin, coinprune or secureprune)"};
}

std::vector<Protocol> ScenarioProtocols::list() const
{
    if (all) return {Protocol::bitcoin, Protocol::coinprune, Protocol::secureprune};
    return {single};
}

namespace {

std::string trim(const std::string& s)
{
    size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

uint32_t parse_u32(const std::string& key, const std::string& value)
{
    size_t pos = 0;
    unsigned long long parsed = 0;
    try {
        parsed = std::stoull(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError{key + ": expected an unsigned integer, got '" + value + "'"};
    }
    if (pos != value.size() || parsed > UINT32_MAX) {
        throw ConfigError{key + ": expected an unsigned integer, got '" + value + "'"};
    }
    return static_cast<uint32_t>(parsed);
}

double parse_double(const std::string& key, const std::string& value)
{
    size_t pos = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError{key + ": expected a number, got '" + value + "'"};
    }
    if (pos != value.size()) {
        throw ConfigError{key + ": expected a number, got '" + value + "'"};
    }
    return parsed;
}

std::vector<std::string> split_list(const std::string& value)
{
    std::vector<std::string> parts;
    std::stringstream stream{value};
    std::string item;
    while (std::getline(stream, item, ',')) {
        parts.push_back(trim(item));
    }
    return parts;
}

} // namespace

FlatConfig FlatConfig::parse(const std::string& text)
{
    FlatConfig config;
    std::stringstream stream{text};
    std::string line;
    size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError{"line " + std::to_string(line_no) + ": expected 'key = value'"};
        }
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError{"line " + std::to_string(line_no) + ": empty key"};
        }
        if (!config.m_entries.emplace(key, value).second) {
            throw ConfigError{"duplicate key '" + key + "'"};
        }
    }
    return config;
}

bool FlatConfig::has(const std::string& key) const
{
    return m_entries.count(key) != 0;
}

std::string FlatConfig::get_string(const std::string& key, const std::string& fallback)
{
    auto it = m_entries.find(key);
    if (it == m_entries.end()) return fallback;
    m_used.insert(key);
    return it->second;
}

uint32_t FlatConfig::get_u32(const std::string& key, uint32_t fallback)
{
    auto it = m_entries.find(key);
    if (it == m_entries.end()) return fallback;
    m_used.insert(key);
    return parse_u32(key, it->second);
}

double FlatConfig::get_double(const std::string& key, double fallback)
{
    auto it = m_entries.find(key);
    if (it == m_entries.end()) return fallback;
    m_used.insert(key);
    return parse_double(key, it->second);
}

std::vector<uint32_t> FlatConfig::get_u32_list(const std::string& key)
{
    auto it = m_entries.find(key);
    if (it == m_entries.end()) return {};
    m_used.insert(key);
    std::vector<uint32_t> out;
    for (const std::string& part : split_list(it->second)) {
        out.push_back(parse_u32(key, part));
    }
    return out;
}

std::vector<double> FlatConfig::get_double_list(const std::string& key)
{
    auto it = m_entries.find(key);
    if (it == m_entries.end()) return {};
    m_used.insert(key);
    std::vector<double> out;
    for (const std::string& part : split_list(it->second)) {
        out.push_back(parse_double(key, part));
    }
    return out;
}

void FlatConfig::finish() const
{
    for (const auto& [key, value] : m_entries) {
        if (m_used.count(key) == 0) {
            throw ConfigError{"unknown key '" + key + "'"};
        }
    }
}

void SimConfig::validate() const
{
    if (n < 2) throw ConfigError{"n: need at least two nodes"};
    if (n_p < 1 || n_p >= n) throw ConfigError{"n_p: peer degree must be in [1, n)"};
    if ((static_cast<uint64_t>(n) * n_p) % 2 != 0) {
        throw ConfigError{"n_p: n * n_p must be even for a regular graph"};
    }
    if (!(lambda > 0.0)) throw ConfigError{"lambda: block rate must be positive"};
    if (!(t_p >= 0.0)) throw ConfigError{"t_p: propagation delay must be non-negative"};
    if (!(b > 0.0)) throw ConfigError{"b: block size must be positive"};
    if (!(r_down > 0.0)) throw ConfigError{"r: download bandwidth must be positive"};
    if (!(r_v > 0.0)) throw ConfigError{"r_v: validation throughput must be positive"};
    if (!(t_proofs >= 0.0)) throw ConfigError{"t_proofs: proof time must be non-negative"};
    if (m < 1 || m > n) throw ConfigError{"m: miner count must be in [1, n]"};
    if (hashrates.size() != m) {
        throw ConfigError{"hashrates: expected one share per miner (" + std::to_string(m) + ")"};
    }
    double sum = 0.0;
    for (double h : hashrates) {
        if (!(h > 0.0)) throw ConfigError{"hashrates: every share must be positive"};
        sum += h;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ConfigError{"hashrates: shares must sum to 1"};
    if (duration_blocks < 1) throw ConfigError{"duration_blocks: must be at least 1"};
    if (protocol != Protocol::bitcoin) {
        if (prune.snapshot_interval < 1) throw ConfigError{"delta_s: snapshot interval must be positive"};
    }
    if (protocol == Protocol::secureprune) {
        if (prune.confirmations < 1) throw ConfigError{"k: confirmation depth must be positive"};
    }
    if (protocol == Protocol::coinprune) {
        if (coinprune.reaffirmation_window < 1) {
            throw ConfigError{"reaffirmation_window: must be positive"};
        }
        if (coinprune.threshold > coinprune.reaffirmation_window) {
            throw ConfigError{"reaffirmation_threshold: cannot exceed the window length"};
        }
        for (uint32_t idx : coinprune.dos_miners) {
            if (idx < 1 || idx > m) {
                throw ConfigError{"dos_miners: miner index " + std::to_string(idx) +
                                  " out of range [1, " + std::to_string(m) + "]"};
            }
        }
    }
    for (uint32_t h : join_heights) {
        if (h < 1 || h > duration_blocks) {
            throw ConfigError{"join_heights: height " + std::to_string(h) +
                              " outside [1, duration_blocks]"};
        }
    }
    if (!(q >= 0.0) || q >= 0.5) {
        throw ConfigError{"q: attacker fraction must be in [0, 0.5)"};
    }
}

ScenarioFile parse_sim_config(const std::string& text)
{
    FlatConfig flat = FlatConfig::parse(text);
    ScenarioFile scenario;
    SimConfig& cfg = scenario.config;

    cfg.n = flat.get_u32("n", cfg.n);
    cfg.n_p = flat.get_u32("n_p", cfg.n_p);
    cfg.lambda = flat.get_double("lambda", cfg.lambda);
    cfg.t_p = flat.get_double("t_p", cfg.t_p);
    cfg.b = flat.get_double("b", cfg.b);
    cfg.r_down = flat.get_double("r", cfg.r_down);
    cfg.r_v = flat.get_double("r_v", cfg.r_v);
    cfg.t_proofs = flat.get_double("t_proofs", cfg.t_proofs);
    cfg.prune.confirmations = flat.get_u32("k", cfg.prune.confirmations);
    cfg.prune.snapshot_interval = flat.get_u32("delta_s", cfg.prune.snapshot_interval);
    cfg.m = flat.get_u32("m", cfg.m);
    if (flat.has("hashrates")) {
        cfg.hashrates = flat.get_double_list("hashrates");
    } else {
        cfg.hashrates.assign(cfg.m, 1.0 / cfg.m);
    }
    cfg.q = flat.get_double("q", cfg.q);
    cfg.duration_blocks = flat.get_u32("duration_blocks", cfg.duration_blocks);
    cfg.coinprune.reaffirmation_window =
        flat.get_u32("reaffirmation_window", cfg.coinprune.reaffirmation_window);
    cfg.coinprune.threshold = flat.get_u32("reaffirmation_threshold", cfg.coinprune.threshold);
    if (flat.has("dos_miners")) cfg.coinprune.dos_miners = flat.get_u32_list("dos_miners");
    if (flat.has("join_heights")) cfg.join_heights = flat.get_u32_list("join_heights");

    std::string protocol = flat.get_string("protocol", "all");
    if (protocol == "all") {
        scenario.protocols.all = true;
    } else {
        scenario.protocols.all = false;
        scenario.protocols.single = protocol_from_name(protocol);
    }
    flat.finish();

    cfg.protocol = scenario.protocols.single;
    // Validate against every protocol the scenario will run, so a bad
    // window or prune parameter is caught before any run starts.
    for (Protocol p : scenario.protocols.list()) {
        SimConfig check = cfg;
        check.protocol = p;
        check.validate();
    }
    return scenario;
}

} // namespace secureprune
