#pragma once

#include <stdexcept>
#include <string>

namespace ppi {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition (bad digit, zero divisor,
// radix mismatch, ...). Maps to exit status 1 in the CLI.
struct domain_error : error {
    using error::error;
};

// gcd(v0, beta) != 1: the divisor has no inverse modulo the radix.
struct not_invertible_error : domain_error {
    using domain_error::domain_error;
};

// A configured resource cap was exceeded (input size limit, period search cap).
struct limit_error : domain_error {
    using domain_error::domain_error;
};

// A checked-mode internal invariant failed. This always indicates a bug in
// the library, never bad input. Maps to exit status 2 in the CLI.
struct internal_error : error {
    using error::error;
};

}  // namespace ppi
