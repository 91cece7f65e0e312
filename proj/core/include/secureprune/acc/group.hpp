// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_ACC_GROUP_HPP
#define SECUREPRUNE_ACC_GROUP_HPP

#include <vector>

#include <secureprune/util/bigint.hpp>

namespace secureprune {

// Multiplicative group Z_N^* of (assumed) unknown order, plus the fixed
// generator used by the accumulator. In test mode the factorization of N
// is recorded so independent oracles can compute element orders; it is
// never consulted by the protocol itself.
struct GroupParams {
    Bigint modulus;
    Bigint generator;
    // Prime factors of the modulus; empty in production.
    std::vector<Bigint> factors;

    bool is_test() const { return !factors.empty(); }

    // Production group: the published RSA-2048 challenge modulus, whose
    // factorization is not publicly known (trusted-setup assumption),
    // with generator 2.
    static GroupParams rsa2048();

    // Tiny test group N = 3233 = 53 * 61, g = 2. Element orders are
    // computable by hand, enabling exhaustive brute-force oracles.
    static GroupParams test_small();
};

// a * b mod N.
Bigint group_mul(const GroupParams& params, const Bigint& a, const Bigint& b);

// base^exp mod N for exp >= 0.
Bigint group_pow(const GroupParams& params, const Bigint& base, const Bigint& exp);

// Modular inverse. Failure means gcd(a, N) > 1, i.e. we stumbled onto a
// factor of N; that is impossible under an honest setup, so it raises
// IntegrityError.
Bigint group_inv(const GroupParams& params, const Bigint& a);

} // namespace secureprune

#endif // SECUREPRUNE_ACC_GROUP_HPP
