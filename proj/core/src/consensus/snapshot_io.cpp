// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/consensus/snapshot_io.hpp>

#include <secureprune/util/errors.hpp>
#include <secureprune/util/fileio.hpp>
#include <secureprune/util/serialize.hpp>

namespace secureprune {

namespace {

constexpr uint32_t SNAPSHOT_MAGIC = 0x5350534e; // "SPSN"
constexpr uint32_t HEADERS_MAGIC = 0x53504844;  // "SPHD"
constexpr uint32_t FORMAT_VERSION = 1;

void expect(Reader& r, uint32_t magic, const char* what)
{
    if (r.u32() != magic) {
        throw ParseError(std::string(what) + ": bad magic");
    }
    if (r.u32() != FORMAT_VERSION) {
        throw ParseError(std::string(what) + ": unsupported version");
    }
}

} // namespace

void write_snapshot_file(const std::string& path, const Snapshot& snapshot)
{
    Writer w;
    w.u32(SNAPSHOT_MAGIC);
    w.u32(FORMAT_VERSION);
    w.u32(snapshot.height);
    w.bigint(snapshot.identifier);
    w.blob(snapshot.state_copy.serialize());
    write_file_atomic(path, w.bytes());
}

Snapshot read_snapshot_file(const std::string& path)
{
    const ByteVec data = read_file(path);
    Reader r(data);
    expect(r, SNAPSHOT_MAGIC, "snapshot file");
    Snapshot snapshot;
    snapshot.height = r.u32();
    snapshot.identifier = r.bigint();
    snapshot.state_copy = UtxoSet::deserialize(r.blob());
    r.finish();
    return snapshot;
}

void write_headers_file(const std::string& path, const HeaderChainFile& file)
{
    Writer w;
    w.u32(HEADERS_MAGIC);
    w.u32(FORMAT_VERSION);
    w.bigint(file.modulus);
    w.bigint(file.generator);
    w.u32(file.difficulty_bits);
    w.u32(static_cast<uint32_t>(file.headers.size()));
    for (const BlockHeader& header : file.headers) {
        write_header(w, header);
    }
    write_file_atomic(path, w.bytes());
}

HeaderChainFile read_headers_file(const std::string& path)
{
    const ByteVec data = read_file(path);
    Reader r(data);
    expect(r, HEADERS_MAGIC, "headers file");
    HeaderChainFile file;
    file.modulus = r.bigint();
    file.generator = r.bigint();
    file.difficulty_bits = r.u32();
    const uint32_t count = r.u32();
    file.headers.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        file.headers.push_back(read_header(r));
    }
    r.finish();
    return file;
}

} // namespace secureprune
