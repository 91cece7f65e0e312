// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/util/bigint.hpp>

#include <secureprune/util/errors.hpp>

namespace secureprune {

ByteVec bigint_to_bytes(const Bigint& x)
{
    if (sgn(x) < 0) {
        throw ParseError("bigint_to_bytes: negative value");
    }
    if (sgn(x) == 0) {
        return {};
    }
    const size_t n_bytes = (mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8;
    ByteVec out(n_bytes);
    size_t written = 0;
    mpz_export(out.data(), &written, 1 /*most significant word first*/,
               1 /*word size*/, 1 /*big-endian*/, 0 /*nails*/, x.get_mpz_t());
    out.resize(written);
    return out;
}

Bigint bigint_from_bytes(ByteSpan bytes)
{
    Bigint x;
    if (!bytes.empty()) {
        mpz_import(x.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    }
    return x;
}

Bigint bigint_from_dec(const std::string& dec)
{
    Bigint x;
    if (mpz_set_str(x.get_mpz_t(), dec.c_str(), 10) != 0) {
        throw ParseError("bigint_from_dec: invalid decimal string");
    }
    return x;
}

} // namespace secureprune
