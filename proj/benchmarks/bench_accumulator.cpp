// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
//
// Microbenchmarks for the group and accumulator primitives on the
// production 2048-bit modulus. These are for profiling, not for
// correctness; the timing-sensitive acceptance checks live in
// tests/acceptance.cpp.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include <secureprune/acc/accumulator.hpp>
#include <secureprune/acc/group.hpp>
#include <secureprune/acc/hash_to_prime.hpp>
#include <secureprune/acc/nipoe.hpp>
#include <secureprune/ledger/utxo.hpp>

using namespace secureprune;

namespace {

const GroupParams& production()
{
    static const GroupParams g = GroupParams::rsa2048();
    return g;
}

ByteVec pseudo_bytes(std::mt19937_64& rng, size_t n)
{
    ByteVec out(n);
    for (auto& b : out) {
        b = static_cast<uint8_t>(rng());
    }
    return out;
}

std::vector<Bigint> record_primes(size_t count, uint64_t seed)
{
    std::mt19937_64 rng{seed};
    std::vector<Bigint> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        out.push_back(hash_to_prime(pseudo_bytes(rng, 48), 256));
    }
    return out;
}

void BM_HashToPrime(benchmark::State& state)
{
    std::mt19937_64 rng{7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hash_to_prime(pseudo_bytes(rng, 48), 256));
    }
}
BENCHMARK(BM_HashToPrime);

void BM_GroupPow(benchmark::State& state)
{
    const GroupParams& g = production();
    std::mt19937_64 rng{11};
    Bigint exp = hash_to_prime(pseudo_bytes(rng, 48), 256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(group_pow(g, g.generator, exp));
    }
}
BENCHMARK(BM_GroupPow);

void BM_AccumulateSet(benchmark::State& state)
{
    const GroupParams& g = production();
    UtxoSet set;
    std::mt19937_64 rng{13};
    for (int64_t i = 0; i < state.range(0); ++i) {
        const Hash256 id = sha256(pseudo_bytes(rng, 32));
        set.insert(UtxoRecord{UtxoKey{id, 0}, 50, pseudo_bytes(rng, 20)});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(accumulate_set(g, set));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AccumulateSet)->Arg(16)->Arg(64)->Arg(256)->Complexity();

void BM_BatchAdd(benchmark::State& state)
{
    const GroupParams& g = production();
    const std::vector<Bigint> primes =
        record_primes(static_cast<size_t>(state.range(0)), 17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(batch_add(g, g.generator, primes));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BatchAdd)->Arg(8)->Arg(32)->Arg(128)->Complexity();

void BM_NipoeVerify(benchmark::State& state)
{
    const GroupParams& g = production();
    const std::vector<Bigint> primes = record_primes(64, 19);
    const Bigint x = primes_product(primes);
    const Bigint w = group_pow(g, g.generator, x);
    const NiPoeProof proof = nipoe_prove(g, g.generator, x, w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nipoe_verify(g, x, g.generator, w, proof));
    }
}
BENCHMARK(BM_NipoeVerify);

void BM_WitnessesForAdded(benchmark::State& state)
{
    const GroupParams& g = production();
    const std::vector<Bigint> primes =
        record_primes(static_cast<size_t>(state.range(0)), 23);
    for (auto _ : state) {
        benchmark::DoNotOptimize(witnesses_for_added(g, g.generator, primes));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WitnessesForAdded)->Arg(8)->Arg(32)->Arg(128)->Complexity();

} // namespace

BENCHMARK_MAIN();
