// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_ACC_HASH_TO_PRIME_HPP
#define SECUREPRUNE_ACC_HASH_TO_PRIME_HPP

#include <cstdint>

#include <secureprune/util/bigint.hpp>
#include <secureprune/util/bytes.hpp>

namespace secureprune {

// Number of rounds of probabilistic primality testing applied to
// candidates (and expected of callers checking PrimeReps).
inline constexpr int PRIME_TEST_ROUNDS = 64;

// Default bit-length of prime representatives.
inline constexpr unsigned DEFAULT_PRIME_BITS = 256;

// Deterministically map arbitrary bytes to an odd prime of exactly
// bit_length bits. Candidates are drawn from SHA-256 of (data ‖ counter)
// with the top bit forced; the counter scans forward until a candidate
// passes PRIME_TEST_ROUNDS rounds of probabilistic primality testing.
// Requires data non-empty and bit_length >= 16. A scan exceeding 2^16
// candidates raises ConfigError (cannot happen for practical lengths).
Bigint hash_to_prime(ByteSpan data, unsigned bit_length = DEFAULT_PRIME_BITS);

} // namespace secureprune

#endif // SECUREPRUNE_ACC_HASH_TO_PRIME_HPP
