// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/util/fileio.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <secureprune/util/errors.hpp>

namespace secureprune {

ByteVec read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    ByteVec data((std::istreambuf_iterator<char>(in)),
                 std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failure: " + path);
    }
    return data;
}

void write_file_atomic(const std::string& path, ByteSpan data)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open for writing: " + tmp);
        }
        out.write(reinterpret_cast<const char*>(data.data()),
                  static_cast<std::streamsize>(data.size()));
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw IoError("write failure: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw IoError("rename failure: " + path + ": " + ec.message());
    }
}

void write_file_atomic(const std::string& path, const std::string& text)
{
    write_file_atomic(path,
                      ByteSpan(reinterpret_cast<const uint8_t*>(text.data()),
                               text.size()));
}

} // namespace secureprune
