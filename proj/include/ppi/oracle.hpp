#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ppi/digit_vec.hpp"
#include "ppi/radix.hpp"

// Brute-force reference arithmetic used for differential testing and for the
// CLI's `oracle` algorithm selector. Built on an off-the-shelf
// arbitrary-precision integer type and deliberately sharing no arithmetic
// with the digit-vector layer, so a bug in one side cannot cancel a bug in
// the other. Not performance-tuned.
namespace ppi::oracle {

using Int = boost::multiprecision::cpp_int;

// Lossless conversions across the module boundary. Only the digit accessors
// of DigitVec are used, never its arithmetic.
Int from_digit_vec(const DigitVec& x);
DigitVec to_digit_vec(const Int& value, Radix radix);

Int from_decimal(const std::string& text);
std::string to_decimal(const Int& value);

std::size_t digit_length(const Int& value, Radix radix);

Int mul(const Int& a, const Int& b);
std::pair<Int, Int> divmod(const Int& a, const Int& b);  // b >= 1
Int pow_of(digit_t beta, std::size_t t);

// Inverse of v modulo m by the extended Euclidean algorithm; requires
// gcd(v, m) == 1 and m >= 2.
Int modinv(const Int& v, const Int& m);

// (u / v) mod beta^s, assembled as beta^q * ((u' / v) mod beta^(s-q)) after
// stripping u = beta^q * u'. Requires gcd(v, beta) == 1.
Int modiv(const Int& u, const Int& v, Radix radix, std::size_t s);

// Simulated long division of u / v (0 < u < v) in radix beta, run until the
// remainder sequence recurs. Returns the period length and the repeating
// digit block, most significant digit first. Requires the reduced
// denominator to be coprime to beta (purely periodic expansion).
struct LongDivPeriod {
    std::size_t t;
    std::vector<digit_t> digits_msf;
};
LongDivPeriod period_longdiv(const Int& u, const Int& v, Radix radix, std::size_t cap);

}  // namespace ppi::oracle
