// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/ledger/utxo.hpp>

#include <set>

#include <secureprune/acc/accumulator.hpp>
#include <secureprune/util/errors.hpp>
#include <secureprune/util/serialize.hpp>

namespace secureprune {

const UtxoValue* UtxoSet::find(const UtxoKey& key) const
{
    auto it = m_records.find(key);
    return it == m_records.end() ? nullptr : &it->second;
}

void UtxoSet::insert(const UtxoRecord& rec)
{
    auto [it, inserted] = m_records.emplace(rec.key, UtxoValue{rec.amount, rec.owner});
    if (!inserted) {
        throw std::logic_error("UtxoSet::insert: duplicate key");
    }
}

void UtxoSet::erase(const UtxoKey& key)
{
    if (m_records.erase(key) == 0) {
        throw std::logic_error("UtxoSet::erase: missing key");
    }
}

uint64_t UtxoSet::total_amount() const
{
    uint64_t total = 0;
    for (const auto& [key, value] : m_records) {
        total += value.amount;
    }
    return total;
}

ByteVec UtxoSet::serialize() const
{
    Writer w;
    w.u32(m_height);
    w.u64(m_records.size());
    for (const auto& [key, value] : m_records) {
        write_utxo_key(w, key);
        w.u64(value.amount);
        w.blob(value.owner);
    }
    return w.take();
}

UtxoSet UtxoSet::deserialize(ByteSpan bytes)
{
    Reader r(bytes);
    UtxoSet set;
    set.m_height = r.u32();
    const uint64_t count = r.u64();
    for (uint64_t i = 0; i < count; ++i) {
        UtxoRecord rec;
        rec.key = read_utxo_key(r);
        rec.amount = r.u64();
        rec.owner = r.blob();
        set.insert(rec);
    }
    r.finish();
    return set;
}

UtxoRecord make_record(const UtxoKey& key, const UtxoValue& value)
{
    return UtxoRecord{key, value.amount, value.owner};
}

Bigint accumulate_set(const GroupParams& params, const UtxoSet& state)
{
    Bigint exponent = 1;
    for (const auto& [key, value] : state.records()) {
        exponent *= record_prime(make_record(key, value));
    }
    return group_pow(params, params.generator, exponent);
}

bool validate_tx(const Transaction& tx, const UtxoSet& state)
{
    for (const TxOutput& out : tx.outputs) {
        if (out.amount == 0) {
            return false;
        }
    }
    if (tx.is_coinbase) {
        return tx.inputs.empty();
    }
    std::set<UtxoKey> seen;
    uint64_t total_in = 0;
    for (const UtxoKey& in : tx.inputs) {
        if (!seen.insert(in).second) {
            return false; // duplicate input within the transaction
        }
        const UtxoValue* value = state.find(in);
        if (value == nullptr) {
            return false; // spends a record the state does not contain
        }
        total_in += value->amount;
    }
    uint64_t total_out = 0;
    for (const TxOutput& out : tx.outputs) {
        total_out += out.amount;
    }
    return total_in >= total_out;
}

TransitionResult state_transition(const UtxoSet& state,
                                  const std::vector<Transaction>& txs)
{
    TransitionResult res;
    res.state = state;
    std::set<UtxoKey> spent;
    for (size_t i = 0; i < txs.size(); ++i) {
        const Transaction& tx = txs[i];
        if (tx.is_coinbase && i != 0) {
            throw TransitionError(i, "state_transition: coinbase not first in block");
        }
        if (!validate_tx(tx, state)) {
            throw TransitionError(i, "state_transition: invalid transaction");
        }
        for (const UtxoKey& in : tx.inputs) {
            if (!spent.insert(in).second) {
                throw TransitionError(i, "state_transition: input already spent in block");
            }
        }
        // The transaction is valid; consume inputs and create outputs.
        for (const UtxoKey& in : tx.inputs) {
            res.deleted.push_back(make_record(in, *state.find(in)));
            res.state.erase(in);
        }
        const Hash256 id = tx_id(tx);
        for (uint32_t vout = 0; vout < tx.outputs.size(); ++vout) {
            const TxOutput& out = tx.outputs[vout];
            const UtxoRecord rec{UtxoKey{id, vout}, out.amount, out.owner};
            res.added.push_back(rec);
            res.state.insert(rec);
        }
    }
    return res;
}

} // namespace secureprune
