// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/acc/hash_to_prime.hpp>

#include <secureprune/util/errors.hpp>
#include <secureprune/util/serialize.hpp>
#include <secureprune/util/sha256.hpp>

namespace secureprune {

namespace {

constexpr uint32_t MAX_COUNTER = 1u << 16;

// bit_length bits drawn from a digest stream seeded with (data ‖ counter):
// the stream is SHA-256 of the seed followed by chained re-hashes, so the
// common case (bit_length <= 256) uses exactly one digest.
Bigint candidate_bits(ByteSpan data, uint32_t counter, unsigned bit_length)
{
    Writer seed;
    seed.raw(data);
    seed.u32(counter);

    ByteVec stream;
    Hash256 block = sha256(seed.bytes());
    const size_t n_bytes = (bit_length + 7) / 8;
    while (stream.size() < n_bytes) {
        stream.insert(stream.end(), block.begin(), block.end());
        block = sha256(ByteSpan(block.data(), block.size()));
    }
    stream.resize(n_bytes);

    Bigint x = bigint_from_bytes(stream);
    // Trim to exactly bit_length bits and force the top bit.
    x >>= static_cast<unsigned>(8 * n_bytes - bit_length);
    mpz_setbit(x.get_mpz_t(), bit_length - 1);
    return x;
}

} // namespace

Bigint hash_to_prime(ByteSpan data, unsigned bit_length)
{
    if (data.empty()) {
        throw ConfigError("hash_to_prime: empty input");
    }
    if (bit_length < 16) {
        throw ConfigError("hash_to_prime: bit_length below 16");
    }
    for (uint32_t counter = 0; counter < MAX_COUNTER; ++counter) {
        Bigint cand = candidate_bits(data, counter, bit_length);
        if (mpz_probab_prime_p(cand.get_mpz_t(), PRIME_TEST_ROUNDS) > 0) {
            return cand;
        }
    }
    throw ConfigError("hash_to_prime: candidate scan exhausted");
}

} // namespace secureprune
