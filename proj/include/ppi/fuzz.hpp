#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ppi/digit_vec.hpp"
#include "ppi/exec.hpp"

namespace ppi {

// Seeded generator + runner for differential testing: every generated
// problem goes through all five division algorithms and the reference
// arithmetic, which must agree digit for digit, and the quotient must
// satisfy (x*v - u) mod beta^s == 0 under reference arithmetic.
struct FuzzConfig {
    std::uint64_t seed = 1;
    std::vector<digit_t> radixes = {2, 3, 10, 257, 65536};
    std::size_t max_s = 64;
    std::size_t count = 1000;
    bool checked = true;
    Backend backend = Backend::serial;
    // Self-test hook: corrupt one algorithm's result so the comparison must
    // report a mismatch. Exercised by the CLI's hidden --tamper flag.
    bool tamper = false;
};

struct FuzzOutcome {
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> reports;  // one line per failing case
};

FuzzOutcome run_differential_fuzz(const FuzzConfig& config);

// One random division problem; also used by the bench subcommand. u gets a
// digit count up to 2s (to exercise truncation) and is occasionally biased
// to the structured cases (zero, u == v, radix-divisible, u + v == 0 mod
// beta^s). `coprime_low_digit` forces u_0 != 0.
struct RandomProblem {
    DigitVec u;
    DigitVec v;
    std::size_t s;
};
RandomProblem random_problem(std::mt19937_64& rng, Radix radix, std::size_t max_s,
                             bool coprime_low_digit = false);

}  // namespace ppi
