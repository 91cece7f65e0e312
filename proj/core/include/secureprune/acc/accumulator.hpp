// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_ACC_ACCUMULATOR_HPP
#define SECUREPRUNE_ACC_ACCUMULATOR_HPP

#include <map>
#include <utility>
#include <vector>

#include <secureprune/acc/group.hpp>
#include <secureprune/acc/nipoe.hpp>
#include <secureprune/util/bytes.hpp>

namespace secureprune {

// Witness that one accumulated element is in the set: a group element w
// with w^prime = A, bundled with the prime representative it witnesses.
struct MembershipWitness {
    Bigint w;
    Bigint prime;

    bool operator==(const MembershipWitness&) const = default;
};

// Witnesses for all tracked elements, keyed by the element's canonical
// byte key (for the ledger, the UTXO key). Ordered map so iteration and
// batch updates are deterministic.
using WitnessTable = std::map<ByteVec, MembershipWitness>;

// Result of a batch accumulator update: the new state plus a proof of
// exponentiation letting verifiers check the transition cheaply.
struct BatchResult {
    Bigint state;
    NiPoeProof proof;
};

// Product of a list of exponents; 1 for the empty list.
Bigint primes_product(const std::vector<Bigint>& primes);

// Accumulator of the empty set: the group generator.
Bigint acc_empty(const GroupParams& params);

// Witness for `target` inside `primes`: g raised to the product of all
// primes except target. Throws MembershipError if target is absent.
Bigint mem_witness(const GroupParams& params, const std::vector<Bigint>& primes,
                   const Bigint& target);

// True iff w^target = A in the group.
bool verify_membership(const GroupParams& params, const Bigint& A,
                       const Bigint& target, const Bigint& w);

// Given w_x^x = A and w_y^y = A with gcd(x, y) = 1, produce w with
// w^(x*y) = A via the Bézout combination w_x^b * w_y^a (a*x + b*y = 1).
// Negative coefficients are realized by group inversion. Throws
// CoprimalityError if gcd(x, y) != 1 and InvalidWitnessError if a
// precondition witness fails its equation.
Bigint shamir_trick(const GroupParams& params, const Bigint& w_x,
                    const Bigint& w_y, const Bigint& x, const Bigint& y,
                    const Bigint& A);

// Aggregate witnesses for pairwise-distinct primes into one W_agg with
// W_agg^(prod primes) = A, by folding shamir_trick over the list.
// Entries are (prime, witness element).
Bigint agg_mem_wit(const GroupParams& params,
                   const std::vector<std::pair<Bigint, Bigint>>& witnesses,
                   const Bigint& A);

// Fold fresh primes into the accumulator: A_new = A^(prod added), with a
// proof that the exponentiation was performed correctly.
BatchResult batch_add(const GroupParams& params, const Bigint& A,
                      const std::vector<Bigint>& added_primes);

// Remove accumulated primes given their witnesses. The new state is the
// aggregated witness of the deleted elements; the proof shows
// A' ^ (prod deleted) = A. Entries are (prime, witness element); an
// entry failing its witness equation raises InvalidWitnessError.
BatchResult batch_del(const GroupParams& params, const Bigint& A,
                      const std::vector<std::pair<Bigint, Bigint>>& deleted);

// Re-anchor surviving witnesses after a deletion, given the post-delete
// state A'. `table` must contain only survivors, valid against the
// pre-delete state A = A'^(prod deleted).
WitnessTable update_witnesses_after_delete(const GroupParams& params,
                                           const Bigint& A_prime,
                                           const WitnessTable& table,
                                           const std::vector<Bigint>& deleted_primes);

// Advance witnesses across an addition: every witness is raised to the
// product of the added primes.
WitnessTable update_witnesses_after_add(const GroupParams& params,
                                        const WitnessTable& table,
                                        const std::vector<Bigint>& added_primes);

// Witnesses for the elements just added on top of state A': the witness
// for x is A' raised to the product of the other added primes. Returned
// in input order; each verifies against A_new = A'^(prod added).
std::vector<MembershipWitness> witnesses_for_added(const GroupParams& params,
                                                   const Bigint& A_prime,
                                                   const std::vector<Bigint>& added_primes);

// For each index i, base raised to the product of all exponents except
// the i-th, computed with a product tree in O(n log n) exponentiations.
std::vector<Bigint> root_factor(const GroupParams& params, const Bigint& base,
                                const std::vector<Bigint>& exponents);

} // namespace secureprune

#endif // SECUREPRUNE_ACC_ACCUMULATOR_HPP
