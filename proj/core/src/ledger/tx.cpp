// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/ledger/tx.hpp>

#include <secureprune/acc/hash_to_prime.hpp>

namespace secureprune {

void write_utxo_key(Writer& w, const UtxoKey& key)
{
    w.hash(key.txid);
    w.u32(key.vout);
}

UtxoKey read_utxo_key(Reader& r)
{
    UtxoKey key;
    key.txid = r.hash();
    key.vout = r.u32();
    return key;
}

void write_tx(Writer& w, const Transaction& tx)
{
    w.u8(tx.is_coinbase ? 1 : 0);
    w.u32(tx.coinbase_height);
    w.u32(static_cast<uint32_t>(tx.inputs.size()));
    for (const UtxoKey& in : tx.inputs) {
        write_utxo_key(w, in);
    }
    w.u32(static_cast<uint32_t>(tx.outputs.size()));
    for (const TxOutput& out : tx.outputs) {
        w.u64(out.amount);
        w.blob(out.owner);
    }
}

Transaction read_tx(Reader& r)
{
    Transaction tx;
    tx.is_coinbase = r.u8() != 0;
    tx.coinbase_height = r.u32();
    const uint32_t n_in = r.u32();
    tx.inputs.reserve(n_in);
    for (uint32_t i = 0; i < n_in; ++i) {
        tx.inputs.push_back(read_utxo_key(r));
    }
    const uint32_t n_out = r.u32();
    tx.outputs.reserve(n_out);
    for (uint32_t i = 0; i < n_out; ++i) {
        TxOutput out;
        out.amount = r.u64();
        out.owner = r.blob();
        tx.outputs.push_back(std::move(out));
    }
    return tx;
}

ByteVec serialize_tx(const Transaction& tx)
{
    Writer w;
    write_tx(w, tx);
    return w.take();
}

Hash256 tx_id(const Transaction& tx)
{
    return sha256(serialize_tx(tx));
}

ByteVec record_bytes(const UtxoRecord& rec)
{
    Writer w;
    write_utxo_key(w, rec.key);
    w.u64(rec.amount);
    w.blob(rec.owner);
    return w.take();
}

Bigint record_prime(const UtxoRecord& rec)
{
    return hash_to_prime(record_bytes(rec), DEFAULT_PRIME_BITS);
}

} // namespace secureprune
