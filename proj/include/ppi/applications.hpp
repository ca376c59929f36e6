#pragma once

#include <vector>

#include "ppi/digit_vec.hpp"
#include "ppi/exec.hpp"

namespace ppi {

// Exact quotient u / v when v divides u. Runs the alternated-carry division
// with output size fixed to the size difference of the operands plus one,
// after stripping the radix power common to u and v. In checked mode the
// quotient is multiplied back (via par_mul, a route independent of the
// division) and compared against u, so a non-exact input is reported.
DigitVec exact_div(const DigitVec& u, const DigitVec& v, ExecOptions opt = {});

enum class Sign { negative, zero, positive };

// x == (u/v) mod beta^r together with the digit modulus w = |xv - u| / beta^r,
// where r = digit_count(u) - digit_count(v) + 1. w * beta^r == |x*v - u|
// exactly and 0 <= w < beta^t.
struct DmodResult {
    DigitVec x;
    DigitVec w;
    Sign sign;  // sign of x*v - u; zero exactly when w == 0
    std::size_t r;
};

// One combined pass computes the modular division and the digit modulus
// simultaneously: the quotient digits multiply into the accumulator cells,
// u's high digits fold in by radix complement, and two alternated-carry
// phases normalize the cells. The final guard cell decides the sign.
DmodResult dmod(const DigitVec& u, const DigitVec& v, ExecOptions opt = {},
                ParTrace* trace_out = nullptr);

// Product u * v by the same accumulate-then-alternated-carry scheme, with
// linear step width. Exists for scheme uniformity and trace comparison; a
// schoolbook product is asymptotically no worse.
struct MulResult {
    DigitVec product;
    ParTrace trace;
};
MulResult par_mul(const DigitVec& u, const DigitVec& v, ExecOptions opt = {});

// The s low-order radix-beta digits of u/v in the beta-adic sense. The digit
// at each position is final once emitted: raising s never changes earlier
// digits.
struct HenselCode {
    std::vector<digit_t> digits;  // exactly `precision` digits, LSF
    Radix radix;
    std::size_t precision;
};

// Incremental digit source for the beta-adic expansion of u/v. Extending the
// precision by one digit costs one recurrence step; nothing is recomputed.
// Carries private mutable state; not shareable mid-stream.
class HenselStream {
  public:
    // Requires gcd(v0, beta) = 1.
    HenselStream(DigitVec u, DigitVec v);

    digit_t next();
    const std::vector<digit_t>& digits() const { return x_; }
    std::size_t emitted() const { return x_.size(); }

  private:
    DigitVec u_;
    DigitVec v_;
    digit_t inverse_;
    wide_t carry_ = 0;
    std::vector<digit_t> x_;
};

HenselCode hensel_code(const DigitVec& u, const DigitVec& v, std::size_t s);

// Smallest t >= 1 with beta^t == 1 (mod modulus), by iterated modular
// multiplication; limit_error past `cap`. Requires modulus >= 2 coprime to
// the radix.
std::size_t multiplicative_order(Radix radix, const DigitVec& modulus, std::size_t cap);

// The repeating digit block T of the radix-beta expansion of u/v
// (0 < u < v), of minimal length t, satisfying u/v = T / (beta^t - 1). The
// fraction is reduced first; the reduced denominator must be coprime to the
// radix (purely periodic expansions only). T's digits emerge least
// significant first; digits_lsf is padded to exactly t positions since the
// period may carry high zeros (1/11 in radix 10 is "09").
struct PeriodResult {
    std::size_t t;
    DigitVec period;                  // value of T
    std::vector<digit_t> digits_lsf;  // exactly t digits
};
PeriodResult rational_period(const DigitVec& u, const DigitVec& v, std::size_t max_t,
                             ExecOptions opt = {});

}  // namespace ppi
