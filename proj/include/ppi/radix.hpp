#pragma once

#include <cstdint>
#include <string>

#include "ppi/errors.hpp"

namespace ppi {

// One radix-beta digit. Digits are stored one per machine word; all two-digit
// products and small sums are evaluated in the same signed 64-bit type.
using digit_t = std::int64_t;

// Accumulator for sums of many two-digit products (the sequential PPI
// accumulators grow past 64 bits for radixes near the cap, since they hold
// up to s products of size (beta-1)^2).
using wide_t = unsigned __int128;
using swide_t = __int128;

// Largest supported radix. With beta <= 2^31, every bounded accumulator in
// the library (x*v products, 2*beta^2 - beta - 1 carry-sweep peaks, beta^2 +
// beta - 2 alternated-carry cells) fits a signed 64-bit word.
inline constexpr digit_t kMaxRadix = digit_t{1} << 31;

// Hard cap on digit-vector length accepted from external input.
inline constexpr std::size_t kMaxDigits = std::size_t{1} << 22;

// The radix beta >= 2 of a positional representation.
class Radix {
  public:
    explicit Radix(digit_t beta) : beta_(beta) {
        if (beta < 2 || beta > kMaxRadix) {
            throw domain_error("radix must be in [2, 2^31], got " + std::to_string(beta));
        }
    }

    digit_t beta() const { return beta_; }

    friend bool operator==(Radix a, Radix b) { return a.beta_ == b.beta_; }
    friend bool operator!=(Radix a, Radix b) { return a.beta_ != b.beta_; }

  private:
    digit_t beta_;
};

// A digit a with a * v0 == 1 (mod beta).
struct DigitInverse {
    digit_t value;
};

// Inverse of a single digit modulo the radix, by the extended Euclidean
// algorithm on machine words. Throws not_invertible_error when
// gcd(v0, beta) != 1; this is the invertibility gate every division
// algorithm relies on.
DigitInverse digit_mod_inverse(digit_t v0, Radix radix);

// Digit-wise complement used to subtract by addition: returns beta - u_k at
// the boundary position k == r and beta - 1 - u_k for k > r. Note the k == r
// case can return beta itself, one more than a digit; callers feed the
// result into an accumulator cell, never back into a canonical digit vector.
digit_t beta_complement_digit(digit_t u_k, std::size_t k, std::size_t r, Radix radix);

}  // namespace ppi
