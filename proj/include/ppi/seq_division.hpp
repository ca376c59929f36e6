#pragma once

#include <optional>
#include <vector>

#include "ppi/digit_vec.hpp"
#include "ppi/exec.hpp"

namespace ppi {

// A modular division instance: compute x with x * v == u (mod beta^s).
// Validated on construction: matching radixes, s >= 1, and gcd(v0, beta) = 1
// so v is invertible modulo the radix. u is unrestricted.
struct ModDivProblem {
    ModDivProblem(DigitVec u_in, DigitVec v_in, std::size_t s_in);

    Radix radix() const { return u.radix(); }

    DigitVec u;
    DigitVec v;
    std::size_t s;
};

// Right-to-left modular division by repeated subtract-and-shift: each round
// solves one quotient digit from the running numerator's low digit, then
// subtracts x_k * v modulo a shrinking power of the radix and shifts down.
DigitVec seq_modiv(const ModDivProblem& p, ExecOptions opt = {});

// Modular division in the inverted pen-and-paper multiplication layout: the
// quotient digits are guessed right to left so that the partial products
// reproduce u. Each round forms the accumulator L_k from already-known
// digits plus a running carry, solves x_k = a(u_k - L_k) mod beta, and
// updates the carry. Numerators divisible by the radix are handled by
// preprocess_numerator internally.
DigitVec ppi_sequential(const ModDivProblem& p, ExecOptions opt = {});

// Factors the numerator u = beta^q * u'. When q < s the quotient of the
// reduced problem (u', v, s - q), shifted up by q digits, solves the
// original problem; when q >= s (or u = 0) the answer is zero and `reduced`
// is empty, meaning no inner run is needed.
struct PreprocessResult {
    std::size_t q;
    std::optional<ModDivProblem> reduced;
};
PreprocessResult preprocess_numerator(const ModDivProblem& p);

namespace detail {

// Per-round accumulator and carry values of one ppi run, for tests that pin
// down the L_k growth and the carry identity.
struct SeqPpiTrace {
    std::vector<wide_t> accumulators;  // L_k for k = 0..s-1 (L_0 = 0)
    std::vector<wide_t> carries;       // c_k for k = 1..s
};

// Raw recurrence without numerator preprocessing; valid for every u >= 0.
// `digit_cutoff` bounds each accumulator sum by the divisor's digit count
// (the two forms are equivalent because the skipped digits are zero).
DigitVec ppi_sequential_impl(const ModDivProblem& p, ExecOptions opt, bool digit_cutoff,
                             SeqPpiTrace* trace);

}  // namespace detail

}  // namespace ppi
