// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_UTIL_ERRORS_HPP
#define SECUREPRUNE_UTIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace secureprune {

// Bad user/runtime configuration (unknown keys, impossible parameters).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A group operation stumbled onto a factor of the modulus. This cannot
// happen under an honest setup, so it is fatal.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element is not a member of the accumulated set.
struct MembershipError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A witness failed its defining equation.
struct InvalidWitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shamir trick requires coprime exponents.
struct CoprimalityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed serialized data.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace secureprune

#endif // SECUREPRUNE_UTIL_ERRORS_HPP
