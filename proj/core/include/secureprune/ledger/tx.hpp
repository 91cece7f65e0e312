// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_LEDGER_TX_HPP
#define SECUREPRUNE_LEDGER_TX_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include <secureprune/util/bigint.hpp>
#include <secureprune/util/bytes.hpp>
#include <secureprune/util/serialize.hpp>
#include <secureprune/util/sha256.hpp>

namespace secureprune {

// Identifies one transaction output: creating transaction digest plus
// output index.
struct UtxoKey {
    Hash256 txid{};
    uint32_t vout = 0;

    auto operator<=>(const UtxoKey&) const = default;
};

struct TxOutput {
    uint64_t amount = 0;
    ByteVec owner;

    bool operator==(const TxOutput&) const = default;
};

// A spendable record: key plus the value it carries. This is the unit
// the accumulator commits to.
struct UtxoRecord {
    UtxoKey key;
    uint64_t amount = 0;
    ByteVec owner;

    bool operator==(const UtxoRecord&) const = default;
};

struct Transaction {
    bool is_coinbase = false;
    // Height tag making otherwise-identical coinbase transactions
    // distinct (coinbases have no inputs to distinguish them). Zero for
    // regular transactions.
    uint32_t coinbase_height = 0;
    std::vector<UtxoKey> inputs;
    std::vector<TxOutput> outputs;

    bool operator==(const Transaction&) const = default;
};

void write_utxo_key(Writer& w, const UtxoKey& key);
UtxoKey read_utxo_key(Reader& r);

void write_tx(Writer& w, const Transaction& tx);
Transaction read_tx(Reader& r);

ByteVec serialize_tx(const Transaction& tx);

// Transaction digest over the canonical serialization.
Hash256 tx_id(const Transaction& tx);

// Canonical bytes of a full record (txid, index, amount, owner): the
// accumulator binds values, not just keys.
ByteVec record_bytes(const UtxoRecord& rec);

// Prime representative of a record, derived from record_bytes.
Bigint record_prime(const UtxoRecord& rec);

} // namespace secureprune

#endif // SECUREPRUNE_LEDGER_TX_HPP
