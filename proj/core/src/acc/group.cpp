// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/acc/group.hpp>

#include <secureprune/util/errors.hpp>

namespace secureprune {

namespace {

// The published RSA-2048 factoring challenge modulus (617 decimal
// digits, 2048 bits). Nobody is known to hold its factorization.
const char* const RSA2048_DEC =
    "2519590847565789349402718324004839857142928212620403202777713783604366202070"
    "7595556264018525880784406918290641249515082189298559149176184502808489120072"
    "8449926873928072877767359714183472702618963750149718246911650776133798590957"
    "0009733045974880842840179742910064245869181719511874612151517265463228221686"
    "9987549182422433637259085141865462043576798423387184774447920739934236584823"
    "8242811981638150106748104516603773060562016196762561338441436038339044149526"
    "3443219011465754445417842402092461651572335077870774981712577246796292638635"
    "6373289912154831438167899885040445364023527381951378636564391212010397122822"
    "120720357";

} // namespace

GroupParams GroupParams::rsa2048()
{
    GroupParams params;
    params.modulus = bigint_from_dec(RSA2048_DEC);
    params.generator = 2;
    return params;
}

GroupParams GroupParams::test_small()
{
    GroupParams params;
    params.modulus = 3233;
    params.generator = 2;
    params.factors = {Bigint(53), Bigint(61)};
    return params;
}

Bigint group_mul(const GroupParams& params, const Bigint& a, const Bigint& b)
{
    Bigint r = a * b;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), params.modulus.get_mpz_t());
    return r;
}

Bigint group_pow(const GroupParams& params, const Bigint& base, const Bigint& exp)
{
    if (sgn(exp) < 0) {
        throw IntegrityError("group_pow: negative exponent");
    }
    Bigint r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
             params.modulus.get_mpz_t());
    return r;
}

Bigint group_inv(const GroupParams& params, const Bigint& a)
{
    Bigint r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), params.modulus.get_mpz_t()) == 0) {
        throw IntegrityError("group_inv: element shares a factor with the modulus");
    }
    return r;
}

} // namespace secureprune
