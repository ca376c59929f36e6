#pragma once

#include <optional>
#include <string_view>

#include "ppi/par_division.hpp"
#include "ppi/seq_division.hpp"

namespace ppi {

// The five division algorithms behind one dispatch point. Names match the
// CLI's --alg values.
enum class Algorithm { seqmodiv, ppi, parmodiv, parppi1, parppi2 };

std::string_view algorithm_name(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct DivisionRun {
    DigitVec x;
    std::optional<ParTrace> trace;  // present for the parallel algorithms
};

// Runs one algorithm on (u, v, s) with uniform semantics: u == 0 yields
// zero immediately; the inverted-multiplication variants strip radix powers
// from u first and shift the reduced quotient back up.
DivisionRun run_division(Algorithm alg, const DigitVec& u, const DigitVec& v, std::size_t s,
                         ExecOptions opt = {});

}  // namespace ppi
