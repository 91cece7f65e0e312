// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_UTIL_SHA256_HPP
#define SECUREPRUNE_UTIL_SHA256_HPP

#include <array>
#include <cstdint>
#include <string>

#include <secureprune/util/bytes.hpp>

namespace secureprune {

using Hash256 = std::array<uint8_t, 32>;

Hash256 sha256(ByteSpan data);

std::string to_hex(const Hash256& h);

} // namespace secureprune

#endif // SECUREPRUNE_UTIL_SHA256_HPP
