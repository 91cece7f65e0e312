// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_UTIL_BIGINT_HPP
#define SECUREPRUNE_UTIL_BIGINT_HPP

#include <gmpxx.h>

#include <string>

#include <secureprune/util/bytes.hpp>

namespace secureprune {

// Arbitrary-precision integer. All protocol values (group elements,
// exponent products, prime representatives) are non-negative Bigints.
using Bigint = mpz_class;

// Minimal big-endian magnitude of a non-negative integer; zero encodes
// as the empty byte string.
ByteVec bigint_to_bytes(const Bigint& x);

// Inverse of bigint_to_bytes. Leading zero bytes are tolerated.
Bigint bigint_from_bytes(ByteSpan bytes);

Bigint bigint_from_dec(const std::string& dec);

} // namespace secureprune

#endif // SECUREPRUNE_UTIL_BIGINT_HPP
