#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "ppi/radix.hpp"

namespace ppi {

// Which executor runs the data-parallel steps. Both yield bit-identical
// results and traces; `serial` is the reference, `openmp` distributes the
// lanes of each step across threads.
enum class Backend { serial, openmp };

struct ExecOptions {
    Backend backend = Backend::serial;
    // Checked mode validates internal invariants (digit bounds, carry
    // identities, disjoint writes) while running and throws internal_error
    // on any violation. Violations indicate library bugs, never bad input.
    bool checked = false;
};

// Parallel accounting for one run: T(s) sequential parallel steps, S(s) the
// widest step (peak simultaneous independent operations), W(s) total
// operations summed over steps.
struct ParTrace {
    std::uint64_t steps = 0;
    std::uint64_t max_width = 0;
    std::uint64_t work = 0;

    void record(std::uint64_t width) {
        steps += 1;
        work += width;
        max_width = std::max(max_width, width);
    }

    friend bool operator==(const ParTrace&, const ParTrace&) = default;
};

// One line of structured text per run; fixed field order for downstream
// consumption by scripts and the bench subcommand.
std::string trace_record(std::string_view algorithm, Radix radix, std::size_t s,
                         const ParTrace& trace);

}  // namespace ppi
