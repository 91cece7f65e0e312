// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/acc/nipoe.hpp>

#include <secureprune/acc/hash_to_prime.hpp>
#include <secureprune/util/serialize.hpp>

namespace secureprune {

Bigint nipoe_challenge(const Bigint& u, const Bigint& x, const Bigint& w)
{
    Writer enc;
    enc.bigint(u);
    enc.bigint(x);
    enc.bigint(w);
    return hash_to_prime(enc.bytes(), DEFAULT_PRIME_BITS);
}

NiPoeProof nipoe_prove(const GroupParams& params, const Bigint& u,
                       const Bigint& x, const Bigint& w)
{
    const Bigint ell = nipoe_challenge(u, x, w);
    const Bigint q = x / ell;
    return NiPoeProof{group_pow(params, u, q)};
}

bool nipoe_verify(const GroupParams& params, const Bigint& x, const Bigint& u,
                  const Bigint& w, const NiPoeProof& proof)
{
    if (sgn(x) < 0) {
        return false;
    }
    const Bigint ell = nipoe_challenge(u, x, w);
    const Bigint r = x % ell;
    const Bigint lhs = group_mul(params, group_pow(params, proof.Q, ell),
                                 group_pow(params, u, r));
    Bigint w_mod = w;
    mpz_mod(w_mod.get_mpz_t(), w_mod.get_mpz_t(), params.modulus.get_mpz_t());
    return lhs == w_mod;
}

} // namespace secureprune
