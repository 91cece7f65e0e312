// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_LEDGER_UTXO_HPP
#define SECUREPRUNE_LEDGER_UTXO_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <secureprune/acc/group.hpp>
#include <secureprune/ledger/tx.hpp>
#include <secureprune/util/bytes.hpp>

namespace secureprune {

struct UtxoValue {
    uint64_t amount = 0;
    ByteVec owner;

    bool operator==(const UtxoValue&) const = default;
};

// The chain state at one height: every unspent output, keyed and
// ordered, plus the height it corresponds to. Ordered map keeps the
// canonical serialization and all iteration deterministic.
class UtxoSet
{
public:
    bool contains(const UtxoKey& key) const { return m_records.count(key) != 0; }
    // nullptr when absent.
    const UtxoValue* find(const UtxoKey& key) const;
    // Throws std::logic_error on duplicate key / missing key: both would
    // mean a validation bug upstream, never bad input.
    void insert(const UtxoRecord& rec);
    void erase(const UtxoKey& key);

    size_t size() const { return m_records.size(); }
    uint32_t height() const { return m_height; }
    void set_height(uint32_t h) { m_height = h; }
    const std::map<UtxoKey, UtxoValue>& records() const { return m_records; }

    // Total coin amount across all records.
    uint64_t total_amount() const;

    bool operator==(const UtxoSet&) const = default;

    ByteVec serialize() const;
    static UtxoSet deserialize(ByteSpan bytes);

private:
    std::map<UtxoKey, UtxoValue> m_records;
    uint32_t m_height = 0;
};

UtxoRecord make_record(const UtxoKey& key, const UtxoValue& value);

// Accumulate every record of the set from an empty accumulator: one
// exponentiation by the product of all record primes. This is how a
// snapshot's identifier is recomputed and checked.
Bigint accumulate_set(const GroupParams& params, const UtxoSet& state);

// True iff inputs all exist in `state` with no duplicates and the
// balance constraint holds (coinbase: no inputs required, balance
// exempt). Output amounts must be positive.
bool validate_tx(const Transaction& tx, const UtxoSet& state);

// A block-level state transition was rejected; `tx_index` identifies
// the offending transaction.
struct TransitionError : std::runtime_error {
    TransitionError(size_t index, const std::string& what)
        : std::runtime_error(what), tx_index(index) {}
    size_t tx_index;
};

struct TransitionResult {
    UtxoSet state;                   // successor state
    std::vector<UtxoRecord> deleted; // S_d: records consumed, in spend order
    std::vector<UtxoRecord> added;   // S_a: records created, in creation order
};

// Apply a block's transactions to the state. Inputs must come from the
// pre-block state (outputs created inside the block are not spendable
// in it), each input may be consumed once, and a coinbase may only
// appear first. One invalid transaction rejects the whole transition
// with TransitionError. The successor state keeps the input height;
// advancing it is the caller's business.
TransitionResult state_transition(const UtxoSet& state,
                                  const std::vector<Transaction>& txs);

} // namespace secureprune

#endif // SECUREPRUNE_LEDGER_UTXO_HPP
