// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <secureprune/acc/accumulator.hpp>
#include <secureprune/acc/group.hpp>
#include <secureprune/acc/hash_to_prime.hpp>
#include <secureprune/acc/nipoe.hpp>
#include <secureprune/util/errors.hpp>

#include "oracle.hpp"

using namespace secureprune;

namespace {

const GroupParams TEST_GROUP = GroupParams::test_small();

Bigint tpow(uint64_t base, uint64_t exp)
{
    return group_pow(TEST_GROUP, Bigint{base}, Bigint{exp});
}

// Accumulate via the library product path, asserting it agrees with
// the prime-at-a-time oracle before returning.
Bigint accumulate_sequential_check(const GroupParams& params,
                                   const std::vector<Bigint>& primes)
{
    Bigint product = primes_product(primes);
    Bigint lib = group_pow(params, params.generator, product);
    REQUIRE(lib == oracle::accumulate_sequential(params, primes));
    return lib;
}

} // namespace

TEST_CASE("group parameters are sound")
{
    CHECK(TEST_GROUP.modulus == 3233);
    CHECK(TEST_GROUP.generator == 2);
    CHECK(TEST_GROUP.factors[0] * TEST_GROUP.factors[1] == TEST_GROUP.modulus);
    CHECK(TEST_GROUP.is_test());

    GroupParams prod = GroupParams::rsa2048();
    CHECK(mpz_sizeinbase(prod.modulus.get_mpz_t(), 2) == 2048);
    CHECK(prod.generator == 2);
    CHECK_FALSE(prod.is_test());
    CHECK(prod.modulus % 2 == 1);

    GroupParams g64 = oracle::group64();
    CHECK(g64.factors[0] * g64.factors[1] == g64.modulus);
    for (const Bigint& f : g64.factors) {
        CHECK(mpz_probab_prime_p(f.get_mpz_t(), PRIME_TEST_ROUNDS) != 0);
    }
}

TEST_CASE("group operations against the order-reduction oracle")
{
    GroupParams g64 = oracle::group64();
    std::mt19937_64 rng{42};
    for (int i = 0; i < 50; ++i) {
        Bigint exp = oracle::random_bigint(rng, 512);
        CHECK(group_pow(g64, g64.generator, exp) ==
              oracle::pow_by_order(g64, g64.generator, exp));
    }

    // Inverse really inverts.
    Bigint a = 1234;
    CHECK(group_mul(TEST_GROUP, a, group_inv(TEST_GROUP, a)) == 1);
    // Inverting a factor multiple exposes the integrity failure.
    CHECK_THROWS_AS(group_inv(TEST_GROUP, Bigint{53}), IntegrityError);
    // Negative exponents are not part of the group API.
    CHECK_THROWS_AS(group_pow(TEST_GROUP, Bigint{2}, Bigint{-1}), IntegrityError);
}

TEST_CASE("hash_to_prime is deterministic, exact-width and prime")
{
    Bigint p1 = hash_to_prime(to_bytes("utxo-record"));
    Bigint p2 = hash_to_prime(to_bytes("utxo-record"));
    CHECK(p1 == p2);
    CHECK(mpz_sizeinbase(p1.get_mpz_t(), 2) == 256);
    CHECK(mpz_probab_prime_p(p1.get_mpz_t(), PRIME_TEST_ROUNDS) != 0);

    // Distinct inputs yield distinct primes.
    std::set<Bigint> seen;
    for (int i = 0; i < 100; ++i) {
        Bigint p = hash_to_prime(to_bytes("input-" + std::to_string(i)));
        CHECK(mpz_sizeinbase(p.get_mpz_t(), 2) == 256);
        CHECK(mpz_probab_prime_p(p.get_mpz_t(), PRIME_TEST_ROUNDS) != 0);
        CHECK(seen.insert(p).second);
    }

    // Widths below and above one digest block.
    for (unsigned bits : {16u, 17u, 64u, 255u, 257u, 512u, 1024u}) {
        Bigint p = hash_to_prime(to_bytes("width"), bits);
        CHECK(mpz_sizeinbase(p.get_mpz_t(), 2) == bits);
        CHECK(mpz_probab_prime_p(p.get_mpz_t(), PRIME_TEST_ROUNDS) != 0);
    }

    CHECK_THROWS_AS(hash_to_prime(ByteVec{}), ConfigError);
    CHECK_THROWS_AS(hash_to_prime(to_bytes("x"), 8), ConfigError);
}

TEST_CASE("accumulation and witnesses reproduce the worked example")
{
    CHECK(acc_empty(TEST_GROUP) == TEST_GROUP.generator);

    std::vector<Bigint> primes{3, 5, 7};
    Bigint A = accumulate_sequential_check(TEST_GROUP, primes);
    CHECK(A == 2917); // 2^105 mod 3233

    Bigint w7 = mem_witness(TEST_GROUP, primes, Bigint{7});
    CHECK(w7 == 438); // 2^15 mod 3233
    CHECK(verify_membership(TEST_GROUP, A, Bigint{7}, w7));
    CHECK_FALSE(verify_membership(TEST_GROUP, A, Bigint{11}, w7));
    CHECK_THROWS_AS(mem_witness(TEST_GROUP, primes, Bigint{11}), MembershipError);

    // Same values via the sequential oracle.
    CHECK(oracle::accumulate_sequential(TEST_GROUP, primes) == A);
    CHECK(oracle::witness_sequential(TEST_GROUP, primes, 2) == w7);
}

TEST_CASE("shamir trick combines witnesses and rejects bad inputs")
{
    // w_x = 2^5 witnesses x=3, w_y = 2^3 witnesses y=5, both against
    // A = 2^15 = 438; the combined witness for 15 is the generator.
    Bigint combined = shamir_trick(TEST_GROUP, Bigint{32}, Bigint{8}, Bigint{3}, Bigint{5},
                                   Bigint{438});
    CHECK(combined == 2);

    CHECK_THROWS_AS(shamir_trick(TEST_GROUP, Bigint{32}, Bigint{32}, Bigint{3}, Bigint{3},
                                 Bigint{438}),
                    CoprimalityError);
    CHECK_THROWS_AS(shamir_trick(TEST_GROUP, Bigint{33}, Bigint{8}, Bigint{3}, Bigint{5},
                                 Bigint{438}),
                    InvalidWitnessError);
}

TEST_CASE("batch deletion reproduces the worked example")
{
    std::vector<Bigint> primes{3, 5, 7};
    Bigint A = group_pow(TEST_GROUP, TEST_GROUP.generator, primes_product(primes));
    Bigint w3 = mem_witness(TEST_GROUP, primes, Bigint{3});
    Bigint w5 = mem_witness(TEST_GROUP, primes, Bigint{5});
    Bigint w7 = mem_witness(TEST_GROUP, primes, Bigint{7});
    CHECK(w3 == tpow(2, 35));
    CHECK(w5 == tpow(2, 21));

    Bigint agg = agg_mem_wit(TEST_GROUP, {{Bigint{3}, w3}, {Bigint{5}, w5}}, A);
    CHECK(agg == 128); // 2^7: witness for {3,5} jointly

    BatchResult del = batch_del(TEST_GROUP, A, {{Bigint{3}, w3}, {Bigint{5}, w5}});
    CHECK(del.state == 128);
    CHECK(nipoe_verify(TEST_GROUP, Bigint{15}, del.state, A, del.proof));

    // Surviving witness is re-anchored to the new state.
    WitnessTable table;
    table[to_bytes("rec-7")] = MembershipWitness{w7, Bigint{7}};
    WitnessTable updated = update_witnesses_after_delete(TEST_GROUP, del.state, table,
                                                         {Bigint{3}, Bigint{5}});
    CHECK(updated.at(to_bytes("rec-7")).w == 2);
    CHECK(verify_membership(TEST_GROUP, del.state, Bigint{7}, Bigint{2}));

    // Deleting nothing keeps the state; the proof still verifies.
    BatchResult noop = batch_del(TEST_GROUP, A, {});
    CHECK(noop.state == A);
    CHECK(nipoe_verify(TEST_GROUP, Bigint{1}, noop.state, A, noop.proof));

    // A bad witness is rejected up front.
    CHECK_THROWS_AS(batch_del(TEST_GROUP, A, {{Bigint{3}, w5}}), InvalidWitnessError);
}

TEST_CASE("batch addition reproduces the worked example")
{
    Bigint A_prime = 128; // state after the deletions above
    BatchResult add = batch_add(TEST_GROUP, A_prime, {Bigint{11}});
    CHECK(add.state == tpow(2, 77));
    CHECK(nipoe_verify(TEST_GROUP, Bigint{11}, A_prime, add.state, add.proof));

    // The survivor's witness advances across the addition.
    WitnessTable table;
    table[to_bytes("rec-7")] = MembershipWitness{Bigint{2}, Bigint{7}};
    WitnessTable updated = update_witnesses_after_add(TEST_GROUP, table, {Bigint{11}});
    CHECK(updated.at(to_bytes("rec-7")).w == 2048); // 2^11
    CHECK(verify_membership(TEST_GROUP, add.state, Bigint{7}, Bigint{2048}));

    // Witnesses for a batch of added elements.
    std::vector<MembershipWitness> fresh =
        witnesses_for_added(TEST_GROUP, A_prime, {Bigint{11}, Bigint{13}});
    Bigint A_new = group_pow(TEST_GROUP, A_prime, Bigint{143});
    REQUIRE(fresh.size() == 2);
    CHECK(fresh[0].w == group_pow(TEST_GROUP, A_prime, Bigint{13}));
    CHECK(fresh[1].w == group_pow(TEST_GROUP, A_prime, Bigint{11}));
    CHECK(verify_membership(TEST_GROUP, A_new, Bigint{11}, fresh[0].w));
    CHECK(verify_membership(TEST_GROUP, A_new, Bigint{13}, fresh[1].w));
}

TEST_CASE("proof of exponentiation: worked example and mutations")
{
    // Tiny statement: 2^15 = 438. The 256-bit challenge dwarfs the
    // exponent, so the quotient is zero and Q is the identity.
    NiPoeProof proof = nipoe_prove(TEST_GROUP, Bigint{2}, Bigint{15}, Bigint{438});
    CHECK(proof.Q == 1);
    CHECK(nipoe_verify(TEST_GROUP, Bigint{15}, Bigint{2}, Bigint{438}, proof));
    CHECK_FALSE(nipoe_verify(TEST_GROUP, Bigint{-15}, Bigint{2}, Bigint{438}, proof));

    // On the 64-bit group an equation that does not hold has no
    // realistic chance of verifying by accident.
    GroupParams g64 = oracle::group64();
    std::mt19937_64 rng{7};
    for (int trial = 0; trial < 40; ++trial) {
        Bigint u = group_pow(g64, g64.generator, oracle::random_bigint(rng, 64));
        Bigint x = oracle::random_bigint(rng, 256);
        Bigint w = group_pow(g64, u, x);
        NiPoeProof good = nipoe_prove(g64, u, x, w);
        REQUIRE(nipoe_verify(g64, x, u, w, good));

        CHECK_FALSE(nipoe_verify(g64, x + 1, u, w, good));
        CHECK_FALSE(nipoe_verify(g64, x, group_mul(g64, u, Bigint{2}), w, good));
        CHECK_FALSE(nipoe_verify(g64, x, u, group_mul(g64, w, Bigint{2}), good));
        NiPoeProof mutated{group_mul(g64, good.Q, Bigint{2})};
        CHECK_FALSE(nipoe_verify(g64, x, u, w, mutated));

        // Running the honest prover on a false statement (claiming
        // u^x equals 2w) cannot make that statement verify.
        Bigint w_false = group_mul(g64, w, Bigint{2});
        NiPoeProof for_false = nipoe_prove(g64, u, x, w_false);
        CHECK_FALSE(nipoe_verify(g64, x, u, w_false, for_false));
    }
}

TEST_CASE("challenge binds every part of the statement")
{
    Bigint l = nipoe_challenge(Bigint{2}, Bigint{15}, Bigint{438});
    CHECK(mpz_sizeinbase(l.get_mpz_t(), 2) == 256);
    CHECK(mpz_probab_prime_p(l.get_mpz_t(), PRIME_TEST_ROUNDS) != 0);
    CHECK(l != nipoe_challenge(Bigint{3}, Bigint{15}, Bigint{438}));
    CHECK(l != nipoe_challenge(Bigint{2}, Bigint{16}, Bigint{438}));
    CHECK(l != nipoe_challenge(Bigint{2}, Bigint{15}, Bigint{439}));
    // Length prefixes prevent boundary-shifting collisions such as
    // (u=2, x=15) vs (u=21, x=5): encodings differ structurally.
    CHECK(nipoe_challenge(Bigint{0x0215}, Bigint{0}, Bigint{1}) !=
          nipoe_challenge(Bigint{0x02}, Bigint{0x15}, Bigint{1}));
}

TEST_CASE("random set evolution maintains witnesses for every member")
{
    GroupParams g64 = oracle::group64();
    std::mt19937_64 rng{2026};

    // Start with six elements.
    std::vector<Bigint> primes;
    for (int i = 0; i < 6; ++i) {
        primes.push_back(hash_to_prime(to_bytes("member-" + std::to_string(i)), 128));
    }
    Bigint A = group_pow(g64, g64.generator, primes_product(primes));
    WitnessTable table;
    for (size_t i = 0; i < primes.size(); ++i) {
        table[to_bytes("member-" + std::to_string(i))] =
            MembershipWitness{mem_witness(g64, primes, primes[i]), primes[i]};
    }
    int fresh_counter = 6;

    for (int round = 0; round < 8; ++round) {
        // Delete a random subset (possibly empty).
        std::vector<std::pair<Bigint, Bigint>> deleted;
        std::vector<Bigint> deleted_primes;
        std::vector<ByteVec> deleted_keys;
        for (const auto& [key, wit] : table) {
            if (rng() % 3 == 0 && deleted.size() + 1 < table.size()) {
                deleted.emplace_back(wit.prime, wit.w);
                deleted_primes.push_back(wit.prime);
                deleted_keys.push_back(key);
            }
        }
        BatchResult del = batch_del(g64, A, deleted);
        CHECK(nipoe_verify(g64, primes_product(deleted_primes), del.state, A, del.proof));
        for (const ByteVec& key : deleted_keys) table.erase(key);
        table = update_witnesses_after_delete(g64, del.state, table, deleted_primes);

        // Add one or two fresh elements.
        std::vector<Bigint> added_primes;
        std::vector<ByteVec> added_keys;
        for (uint64_t i = 0, n = 1 + rng() % 2; i < n; ++i) {
            ByteVec key = to_bytes("member-" + std::to_string(fresh_counter++));
            added_keys.push_back(key);
            added_primes.push_back(hash_to_prime(key, 128));
        }
        BatchResult add = batch_add(g64, del.state, added_primes);
        CHECK(nipoe_verify(g64, primes_product(added_primes), del.state, add.state, add.proof));
        table = update_witnesses_after_add(g64, table, added_primes);
        std::vector<MembershipWitness> fresh = witnesses_for_added(g64, del.state, added_primes);
        for (size_t i = 0; i < added_keys.size(); ++i) table[added_keys[i]] = fresh[i];
        A = add.state;

        // Every tracked member still verifies, and the state matches
        // the from-scratch product of the member primes.
        std::vector<Bigint> member_primes;
        for (const auto& [key, wit] : table) {
            CHECK(verify_membership(g64, A, wit.prime, wit.w));
            member_primes.push_back(wit.prime);
        }
        CHECK(A == group_pow(g64, g64.generator, primes_product(member_primes)));
        CHECK(A == oracle::accumulate_sequential(g64, member_primes));
    }
}

TEST_CASE("root_factor equals the one-at-a-time witness oracle")
{
    GroupParams g64 = oracle::group64();
    for (size_t n : {1u, 2u, 3u, 7u, 16u}) {
        std::vector<Bigint> primes;
        for (size_t i = 0; i < n; ++i) {
            primes.push_back(hash_to_prime(to_bytes("rf-" + std::to_string(i)), 96));
        }
        std::vector<Bigint> witnesses = root_factor(g64, g64.generator, primes);
        REQUIRE(witnesses.size() == n);
        for (size_t i = 0; i < n; ++i) {
            CHECK(witnesses[i] == oracle::witness_sequential(g64, primes, i));
        }
    }
}
