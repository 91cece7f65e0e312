// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/simnet/metrics.hpp>

#include <charconv>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <secureprune/util/bytes.hpp>
#include <secureprune/util/errors.hpp>
#include <secureprune/util/fileio.hpp>

namespace secureprune {

namespace {

// Shortest representation that parses back to the same double, so a
// re-export of imported metrics is byte-identical.
std::string format_double(double value)
{
    char buffer[64];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

double parse_double_field(const std::string& field, const std::string& file)
{
    double value = 0.0;
    auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc{} || result.ptr != field.data() + field.size()) {
        throw ParseError{file + ": expected a number, got '" + field + "'"};
    }
    return value;
}

uint32_t parse_u32_field(const std::string& field, const std::string& file)
{
    uint32_t value = 0;
    auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc{} || result.ptr != field.data() + field.size()) {
        throw ParseError{file + ": expected an unsigned integer, got '" + field + "'"};
    }
    return value;
}

uint64_t parse_u64_field(const std::string& field, const std::string& file)
{
    uint64_t value = 0;
    auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc{} || result.ptr != field.data() + field.size()) {
        throw ParseError{file + ": expected an unsigned integer, got '" + field + "'"};
    }
    return value;
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    size_t begin = 0;
    while (true) {
        size_t comma = line.find(',', begin);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

// Returns the data rows of a CSV file after checking its header line.
std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const std::string& expected_header)
{
    ByteVec raw = read_file(path);
    std::string text{raw.begin(), raw.end()};
    std::vector<std::vector<std::string>> rows;
    size_t begin = 0;
    bool saw_header = false;
    while (begin < text.size()) {
        size_t end = text.find('\n', begin);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(begin, end - begin);
        begin = end + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != expected_header) {
                throw ParseError{path + ": expected header '" + expected_header + "'"};
            }
            saw_header = true;
            continue;
        }
        rows.push_back(split_fields(line));
    }
    if (!saw_header) throw ParseError{path + ": missing header line"};
    return rows;
}

std::vector<std::vector<std::string>> read_csv_any_header(const std::string& path,
                                                          std::string& header_out)
{
    ByteVec raw = read_file(path);
    std::string text{raw.begin(), raw.end()};
    std::vector<std::vector<std::string>> rows;
    size_t begin = 0;
    bool saw_header = false;
    while (begin < text.size()) {
        size_t end = text.find('\n', begin);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(begin, end - begin);
        begin = end + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            header_out = line;
            saw_header = true;
            continue;
        }
        rows.push_back(split_fields(line));
    }
    if (!saw_header) throw ParseError{path + ": missing header line"};
    return rows;
}

void require_fields(const std::vector<std::string>& fields, size_t expected,
                    const std::string& file)
{
    if (fields.size() != expected) {
        throw ParseError{file + ": expected " + std::to_string(expected) +
                         " fields per row, got " + std::to_string(fields.size())};
    }
}

} // namespace

void export_metrics(const std::vector<Metrics>& runs, const std::string& out_dir)
{
    if (runs.empty()) throw ConfigError{"export_metrics: nothing to export"};
    std::set<Protocol> seen;
    for (const Metrics& run : runs) {
        if (!seen.insert(run.protocol).second) {
            throw ConfigError{"export_metrics: duplicate runs for protocol " +
                              protocol_name(run.protocol)};
        }
    }
    std::filesystem::create_directories(out_dir);

    // storage_series.csv: one height column plus one column per
    // protocol that produced a storage series.
    std::vector<const Metrics*> with_storage;
    for (const Metrics& run : runs) {
        if (!run.storage.empty()) with_storage.push_back(&run);
    }
    std::string storage_csv = "height";
    for (const Metrics* run : with_storage) {
        storage_csv += "," + protocol_name(run->protocol) + "_mib";
    }
    storage_csv += "\n";
    if (!with_storage.empty()) {
        size_t rows = with_storage.front()->storage.size();
        for (const Metrics* run : with_storage) {
            if (run->storage.size() != rows) {
                throw ConfigError{"export_metrics: storage series lengths differ between runs"};
            }
        }
        for (size_t row = 0; row < rows; ++row) {
            uint32_t height = with_storage.front()->storage[row].first;
            std::string line = std::to_string(height);
            for (const Metrics* run : with_storage) {
                if (run->storage[row].first != height) {
                    throw ConfigError{"export_metrics: storage series heights differ between runs"};
                }
                line += "," + format_double(run->storage[row].second);
            }
            storage_csv += line + "\n";
        }
    }
    write_file_atomic(out_dir + "/storage_series.csv", storage_csv);

    std::string prune_csv = "protocol,height\n";
    for (const Metrics& run : runs) {
        for (uint32_t height : run.prune_heights) {
            prune_csv += protocol_name(run.protocol) + "," + std::to_string(height) + "\n";
        }
    }
    write_file_atomic(out_dir + "/prune_events.csv", prune_csv);

    std::string sync_csv = "join_height,protocol,seconds\n";
    for (const Metrics& run : runs) {
        for (const auto& [height, seconds] : run.sync_times) {
            sync_csv += std::to_string(height) + "," + protocol_name(run.protocol) + "," +
                        format_double(seconds) + "\n";
        }
    }
    write_file_atomic(out_dir + "/sync_times.csv", sync_csv);

    // delays.csv doubles as the run manifest: one row per run, in
    // export order, so an import can rebuild the exact run list.
    std::string delays_csv = "protocol,mean_delay_seconds,max_delay_seconds\n";
    for (const Metrics& run : runs) {
        delays_csv += protocol_name(run.protocol) + "," + format_double(run.mean_delay) + "," +
                      format_double(run.max_delay) + "\n";
    }
    write_file_atomic(out_dir + "/delays.csv", delays_csv);

    std::string miners_csv = "protocol,miner,blocks\n";
    for (const Metrics& run : runs) {
        for (size_t miner = 0; miner < run.miner_blocks.size(); ++miner) {
            miners_csv += protocol_name(run.protocol) + "," + std::to_string(miner + 1) + "," +
                          std::to_string(run.miner_blocks[miner]) + "\n";
        }
    }
    write_file_atomic(out_dir + "/miner_blocks.csv", miners_csv);

    std::string bench_csv = "protocol,size,seconds\n";
    for (const Metrics& run : runs) {
        for (const ProofBenchRow& row : run.proof_bench) {
            bench_csv += protocol_name(run.protocol) + "," + std::to_string(row.size) + "," +
                         format_double(row.seconds) + "\n";
        }
    }
    write_file_atomic(out_dir + "/proof_bench.csv", bench_csv);
}

std::vector<Metrics> import_metrics(const std::string& out_dir)
{
    const std::string delays_path = out_dir + "/delays.csv";
    std::vector<Metrics> runs;
    std::map<std::string, size_t> index;
    for (const auto& fields : read_csv(delays_path, "protocol,mean_delay_seconds,max_delay_seconds")) {
        require_fields(fields, 3, delays_path);
        Metrics run;
        try {
            run.protocol = protocol_from_name(fields[0]);
        } catch (const ConfigError& e) {
            throw ParseError{delays_path + ": " + e.what()};
        }
        run.mean_delay = parse_double_field(fields[1], delays_path);
        run.max_delay = parse_double_field(fields[2], delays_path);
        if (!index.emplace(fields[0], runs.size()).second) {
            throw ParseError{delays_path + ": duplicate protocol " + fields[0]};
        }
        runs.push_back(std::move(run));
    }

    auto run_for = [&](const std::string& protocol, const std::string& file) -> Metrics& {
        auto it = index.find(protocol);
        if (it == index.end()) {
            throw ParseError{file + ": protocol '" + protocol + "' not listed in delays.csv"};
        }
        return runs[it->second];
    };

    const std::string storage_path = out_dir + "/storage_series.csv";
    std::string header;
    auto storage_rows = read_csv_any_header(storage_path, header);
    std::vector<std::string> columns = split_fields(header);
    if (columns.empty() || columns[0] != "height") {
        throw ParseError{storage_path + ": first column must be 'height'"};
    }
    std::vector<Metrics*> column_runs;
    for (size_t c = 1; c < columns.size(); ++c) {
        const std::string& name = columns[c];
        const std::string suffix = "_mib";
        if (name.size() <= suffix.size() ||
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) {
            throw ParseError{storage_path + ": column '" + name + "' must end in _mib"};
        }
        column_runs.push_back(&run_for(name.substr(0, name.size() - suffix.size()), storage_path));
    }
    for (const auto& fields : storage_rows) {
        require_fields(fields, columns.size(), storage_path);
        uint32_t height = parse_u32_field(fields[0], storage_path);
        for (size_t c = 1; c < fields.size(); ++c) {
            column_runs[c - 1]->storage.emplace_back(height,
                                                     parse_double_field(fields[c], storage_path));
        }
    }

    const std::string prune_path = out_dir + "/prune_events.csv";
    for (const auto& fields : read_csv(prune_path, "protocol,height")) {
        require_fields(fields, 2, prune_path);
        run_for(fields[0], prune_path).prune_heights.push_back(parse_u32_field(fields[1], prune_path));
    }

    const std::string sync_path = out_dir + "/sync_times.csv";
    for (const auto& fields : read_csv(sync_path, "join_height,protocol,seconds")) {
        require_fields(fields, 3, sync_path);
        run_for(fields[1], sync_path)
            .sync_times.emplace_back(parse_u32_field(fields[0], sync_path),
                                     parse_double_field(fields[2], sync_path));
    }

    const std::string miners_path = out_dir + "/miner_blocks.csv";
    for (const auto& fields : read_csv(miners_path, "protocol,miner,blocks")) {
        require_fields(fields, 3, miners_path);
        Metrics& run = run_for(fields[0], miners_path);
        uint32_t miner = parse_u32_field(fields[1], miners_path);
        if (miner != run.miner_blocks.size() + 1) {
            throw ParseError{miners_path + ": miner indices must be sequential from 1"};
        }
        run.miner_blocks.push_back(parse_u64_field(fields[2], miners_path));
    }

    const std::string bench_path = out_dir + "/proof_bench.csv";
    for (const auto& fields : read_csv(bench_path, "protocol,size,seconds")) {
        require_fields(fields, 3, bench_path);
        run_for(fields[0], bench_path)
            .proof_bench.push_back(ProofBenchRow{parse_u32_field(fields[1], bench_path),
                                                 parse_double_field(fields[2], bench_path)});
    }

    return runs;
}

} // namespace secureprune
