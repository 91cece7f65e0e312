// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_UTIL_FILEIO_HPP
#define SECUREPRUNE_UTIL_FILEIO_HPP

#include <string>

#include <secureprune/util/bytes.hpp>

namespace secureprune {

// Whole-file read; throws IoError when unreadable.
ByteVec read_file(const std::string& path);

// Write to a sibling temporary file, then rename over the target, so a
// failed run never leaves a partial file behind. Throws IoError.
void write_file_atomic(const std::string& path, ByteSpan data);
void write_file_atomic(const std::string& path, const std::string& text);

} // namespace secureprune

#endif // SECUREPRUNE_UTIL_FILEIO_HPP
