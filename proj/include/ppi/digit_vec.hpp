#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppi/radix.hpp"

namespace ppi {

// A nonnegative integer as a little-endian sequence of radix-beta digits
// (index 0 is least significant). Always canonical: no high-order zero
// digits, so zero is the empty sequence and equality is structural.
// Immutable after construction; safe to share across threads.
class DigitVec {
  public:
    explicit DigitVec(Radix radix) : radix_(radix) {}

    // Validates every digit lies in [0, beta) and strips high zeros.
    static DigitVec from_digits(std::vector<digit_t> digits, Radix radix);

    const std::vector<digit_t>& digits() const { return digits_; }
    Radix radix() const { return radix_; }

    // Digit at position i, zero beyond the stored length.
    digit_t digit(std::size_t i) const { return i < digits_.size() ? digits_[i] : 0; }

    // Number of digits needed to represent the value; 0 for zero.
    std::size_t digit_count() const { return digits_.size(); }

    bool is_zero() const { return digits_.empty(); }

    friend bool operator==(const DigitVec& a, const DigitVec& b) {
        return a.radix_ == b.radix_ && a.digits_ == b.digits_;
    }

  private:
    std::vector<digit_t> digits_;
    Radix radix_;
};

// -------- conversions --------

// Parse a nonempty unsigned ASCII decimal numeral into radix-beta digits.
DigitVec from_decimal_string(std::string_view text, Radix radix);

// Decimal numeral of the value; "0" for zero. Round-trips with
// from_decimal_string.
std::string to_decimal_string(const DigitVec& x);

// Convenience for machine-sized values.
DigitVec from_integer(std::uint64_t value, Radix radix);

// -------- measurement, truncation, shifting --------

std::size_t digit_count(const DigitVec& x);

// x mod beta^s.
DigitVec truncate_mod_power(const DigitVec& x, std::size_t s);

// The first s digit positions of x, zero-padded on the high end. Padding is
// always this explicit; DigitVec itself never stores pad digits.
std::vector<digit_t> pad_to(const DigitVec& x, std::size_t s);

// Factor x = beta^q * rest with rest not divisible by beta.
struct StripResult {
    std::size_t q;
    DigitVec rest;
};
StripResult strip_beta_power(const DigitVec& x);  // requires x != 0

// x * beta^q.
DigitVec shift_up(const DigitVec& x, std::size_t q);

// floor(x / beta^q).
DigitVec shift_down(const DigitVec& x, std::size_t q);

// -------- comparison and schoolbook helpers --------
// Support arithmetic for the division algorithms and the CLI; all operands
// must share one radix (domain_error otherwise).

// -1, 0, +1 as a < b, a == b, a > b.
int compare(const DigitVec& a, const DigitVec& b);

DigitVec add(const DigitVec& a, const DigitVec& b);

// a - b; requires a >= b.
DigitVec sub(const DigitVec& a, const DigitVec& b);

// a * d for a single digit 0 <= d < beta.
DigitVec scalar_mul(const DigitVec& a, digit_t d);

// (a - b) mod beta^e for a, b < beta^e.
DigitVec mod_sub_pow(const DigitVec& a, const DigitVec& b, std::size_t e);

// beta^e.
DigitVec power_of_beta(Radix radix, std::size_t e);

// Quotient and remainder of a / b, b != 0. Schoolbook long division with a
// binary search for each quotient digit; slow but simple, used only by the
// utility layer (gcd, period search), never by the division algorithms.
struct DivModResult {
    DigitVec quot;
    DigitVec rem;
};
DivModResult divmod(const DigitVec& a, const DigitVec& b);

DigitVec gcd(const DigitVec& a, const DigitVec& b);

}  // namespace ppi
