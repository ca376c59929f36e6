#pragma once

#include "ppi/exec.hpp"
#include "ppi/pardo.hpp"
#include "ppi/seq_division.hpp"

namespace ppi {

struct ParResult {
    DigitVec x;
    ParTrace trace;
};

// Parallel subtract-and-shift modular division with carry-save propagation:
// the working numerator digits are updated in place by one pardo per round,
// with signed double-digit carries in a separate array and a serial update
// of the first carry each round.
ParResult par_modiv(const ModDivProblem& p, ExecOptions opt = {});

// Parallel inverted-multiplication division, carry-save variant: partial
// products are accumulated into L as soon as each quotient digit is known,
// all carries are updated inside the single pardo, every variable stays one
// nonnegative digit, and the input u is never mutated.
ParResult par_ppi_v1(const ModDivProblem& p, ExecOptions opt = {});

// Parallel inverted-multiplication division with alternated carry
// propagation: per round one width-1 digit solve, one pardo
// multiply-accumulate, and one pardo sweep that moves each even-offset
// cell's overflow into its odd-offset neighbour. All cells stay bounded
// (even offsets one digit, odd offsets at most beta^2 + beta - 2), which
// checked mode asserts after every sweep along with the pre-sweep bounds.
ParResult par_ppi_v2(const ModDivProblem& p, ExecOptions opt = {});

namespace detail {

// Raw transcriptions without numerator preprocessing (valid for any u).
ParResult par_modiv_core(const ModDivProblem& p, ExecOptions opt);
ParResult par_ppi_v1_core(const ModDivProblem& p, ExecOptions opt);
ParResult par_ppi_v2_core(const ModDivProblem& p, ExecOptions opt);

}  // namespace detail

}  // namespace ppi
