// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/util/sha256.hpp>

#include <openssl/evp.h>

#include <stdexcept>

namespace secureprune {

Hash256 sha256(ByteSpan data)
{
    Hash256 out{};
    unsigned int out_len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &out_len,
                   EVP_sha256(), nullptr) != 1 ||
        out_len != out.size()) {
        throw std::runtime_error("sha256: digest computation failed");
    }
    return out;
}

std::string to_hex(const Hash256& h)
{
    return to_hex(ByteSpan(h.data(), h.size()));
}

} // namespace secureprune
