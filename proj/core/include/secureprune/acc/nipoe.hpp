// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_ACC_NIPOE_HPP
#define SECUREPRUNE_ACC_NIPOE_HPP

#include <secureprune/acc/group.hpp>
#include <secureprune/util/bigint.hpp>

namespace secureprune {

// Non-interactive proof of exponentiation: convinces a verifier that
// w = u^x in the group at the cost of one short exponentiation instead
// of one |x|-bit exponentiation.
struct NiPoeProof {
    Bigint Q;

    bool operator==(const NiPoeProof&) const = default;
};

// Fiat–Shamir challenge: a 256-bit prime derived from the canonical
// length-prefixed big-endian encodings of (u, x, w).
Bigint nipoe_challenge(const Bigint& u, const Bigint& x, const Bigint& w);

// Prove w = u^x. Proving a false statement simply yields a proof that
// fails verification.
NiPoeProof nipoe_prove(const GroupParams& params, const Bigint& u,
                       const Bigint& x, const Bigint& w);

// Verify that w = u^x given the proof: recompute the challenge ℓ and
// check Q^ℓ · u^(x mod ℓ) = w. Runtime is independent of the size of x
// beyond a single modular reduction.
bool nipoe_verify(const GroupParams& params, const Bigint& x, const Bigint& u,
                  const Bigint& w, const NiPoeProof& proof);

} // namespace secureprune

#endif // SECUREPRUNE_ACC_NIPOE_HPP
