// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/acc/accumulator.hpp>

#include <secureprune/util/errors.hpp>

namespace secureprune {

namespace {

// base^e where e may be negative (negative exponents via inversion).
Bigint pow_signed(const GroupParams& params, const Bigint& base, const Bigint& e)
{
    if (sgn(e) >= 0) {
        return group_pow(params, base, e);
    }
    return group_pow(params, group_inv(params, base), -e);
}

} // namespace

Bigint primes_product(const std::vector<Bigint>& primes)
{
    Bigint prod = 1;
    for (const Bigint& p : primes) {
        prod *= p;
    }
    return prod;
}

Bigint acc_empty(const GroupParams& params)
{
    return params.generator;
}

Bigint mem_witness(const GroupParams& params, const std::vector<Bigint>& primes,
                   const Bigint& target)
{
    Bigint prod = 1;
    bool found = false;
    for (const Bigint& p : primes) {
        if (!found && p == target) {
            found = true;
            continue;
        }
        prod *= p;
    }
    if (!found) {
        throw MembershipError("mem_witness: target not in accumulated set");
    }
    return group_pow(params, params.generator, prod);
}

bool verify_membership(const GroupParams& params, const Bigint& A,
                       const Bigint& target, const Bigint& w)
{
    Bigint a_mod = A;
    mpz_mod(a_mod.get_mpz_t(), a_mod.get_mpz_t(), params.modulus.get_mpz_t());
    return group_pow(params, w, target) == a_mod;
}

Bigint shamir_trick(const GroupParams& params, const Bigint& w_x,
                    const Bigint& w_y, const Bigint& x, const Bigint& y,
                    const Bigint& A)
{
    Bigint gcd, a, b;
    mpz_gcdext(gcd.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), x.get_mpz_t(),
               y.get_mpz_t());
    if (gcd != 1) {
        throw CoprimalityError("shamir_trick: exponents not coprime");
    }
    if (!verify_membership(params, A, x, w_x)) {
        throw InvalidWitnessError("shamir_trick: first witness fails its equation");
    }
    if (!verify_membership(params, A, y, w_y)) {
        throw InvalidWitnessError("shamir_trick: second witness fails its equation");
    }
    // a*x + b*y = 1, so (w_x^b * w_y^a)^(x*y) = A^(b*y) * A^(a*x) = A.
    return group_mul(params, pow_signed(params, w_x, b),
                     pow_signed(params, w_y, a));
}

Bigint agg_mem_wit(const GroupParams& params,
                   const std::vector<std::pair<Bigint, Bigint>>& witnesses,
                   const Bigint& A)
{
    if (witnesses.empty()) {
        throw MembershipError("agg_mem_wit: empty witness list");
    }
    Bigint w_agg = witnesses.front().second;
    Bigint prod = witnesses.front().first;
    for (size_t i = 1; i < witnesses.size(); ++i) {
        const auto& [prime, w] = witnesses[i];
        w_agg = shamir_trick(params, w_agg, w, prod, prime, A);
        prod *= prime;
    }
    return w_agg;
}

BatchResult batch_add(const GroupParams& params, const Bigint& A,
                      const std::vector<Bigint>& added_primes)
{
    const Bigint exponent = primes_product(added_primes);
    const Bigint a_new = group_pow(params, A, exponent);
    return BatchResult{a_new, nipoe_prove(params, A, exponent, a_new)};
}

BatchResult batch_del(const GroupParams& params, const Bigint& A,
                      const std::vector<std::pair<Bigint, Bigint>>& deleted)
{
    Bigint exponent = 1;
    for (size_t i = 0; i < deleted.size(); ++i) {
        const auto& [prime, w] = deleted[i];
        if (!verify_membership(params, A, prime, w)) {
            throw InvalidWitnessError(
                "batch_del: invalid witness for element " + std::to_string(i) +
                " (prime " + prime.get_str() + ")");
        }
        exponent *= prime;
    }
    const Bigint a_prime = deleted.empty() ? A : agg_mem_wit(params, deleted, A);
    return BatchResult{a_prime, nipoe_prove(params, a_prime, exponent, A)};
}

WitnessTable update_witnesses_after_delete(const GroupParams& params,
                                           const Bigint& A_prime,
                                           const WitnessTable& table,
                                           const std::vector<Bigint>& deleted_primes)
{
    if (deleted_primes.empty()) {
        return table;
    }
    const Bigint prod_deleted = primes_product(deleted_primes);
    const Bigint a_old = group_pow(params, A_prime, prod_deleted);
    WitnessTable out;
    for (const auto& [key, entry] : table) {
        Bigint w_new = shamir_trick(params, A_prime, entry.w, prod_deleted,
                                    entry.prime, a_old);
        out.emplace(key, MembershipWitness{std::move(w_new), entry.prime});
    }
    return out;
}

WitnessTable update_witnesses_after_add(const GroupParams& params,
                                        const WitnessTable& table,
                                        const std::vector<Bigint>& added_primes)
{
    if (added_primes.empty()) {
        return table;
    }
    const Bigint prod_added = primes_product(added_primes);
    WitnessTable out;
    for (const auto& [key, entry] : table) {
        out.emplace(key, MembershipWitness{group_pow(params, entry.w, prod_added),
                                           entry.prime});
    }
    return out;
}

std::vector<MembershipWitness> witnesses_for_added(const GroupParams& params,
                                                   const Bigint& A_prime,
                                                   const std::vector<Bigint>& added_primes)
{
    std::vector<MembershipWitness> out;
    if (added_primes.empty()) {
        return out;
    }
    std::vector<Bigint> bases = root_factor(params, A_prime, added_primes);
    out.reserve(added_primes.size());
    for (size_t i = 0; i < added_primes.size(); ++i) {
        out.push_back(MembershipWitness{std::move(bases[i]), added_primes[i]});
    }
    return out;
}

std::vector<Bigint> root_factor(const GroupParams& params, const Bigint& base,
                                const std::vector<Bigint>& exponents)
{
    if (exponents.empty()) {
        return {};
    }
    if (exponents.size() == 1) {
        return {base};
    }
    const size_t mid = exponents.size() / 2;
    const std::vector<Bigint> left(exponents.begin(), exponents.begin() + mid);
    const std::vector<Bigint> right(exponents.begin() + mid, exponents.end());
    // Left leaves absorb the right product and vice versa, so every leaf
    // i ends up with base^(prod of all exponents except the i-th).
    std::vector<Bigint> out =
        root_factor(params, group_pow(params, base, primes_product(right)), left);
    std::vector<Bigint> tail =
        root_factor(params, group_pow(params, base, primes_product(left)), right);
    out.insert(out.end(), std::make_move_iterator(tail.begin()),
               std::make_move_iterator(tail.end()));
    return out;
}

} // namespace secureprune
