// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/ledger/merkle.hpp>

namespace secureprune {

Hash256 merkle_root(const std::vector<Transaction>& txs)
{
    if (txs.empty()) {
        return sha256(ByteSpan{});
    }
    std::vector<Hash256> level;
    level.reserve(txs.size());
    for (const Transaction& tx : txs) {
        level.push_back(tx_id(tx));
    }
    while (level.size() > 1) {
        if (level.size() % 2 != 0) {
            level.push_back(level.back());
        }
        std::vector<Hash256> next;
        next.reserve(level.size() / 2);
        for (size_t i = 0; i < level.size(); i += 2) {
            ByteVec cat;
            cat.reserve(64);
            cat.insert(cat.end(), level[i].begin(), level[i].end());
            cat.insert(cat.end(), level[i + 1].begin(), level[i + 1].end());
            next.push_back(sha256(cat));
        }
        level = std::move(next);
    }
    return level.front();
}

} // namespace secureprune
