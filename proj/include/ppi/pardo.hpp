#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ppi/errors.hpp"
#include "ppi/exec.hpp"
#include "ppi/radix.hpp"

namespace ppi {

// Up to two cell writes produced by one lane of a parallel step.
struct CellWrite {
    std::uint32_t cell;
    digit_t value;
};

struct CellWrites {
    std::array<CellWrite, 2> w{};
    int count = 0;

    void set(std::size_t cell, digit_t value) {
        w[static_cast<std::size_t>(count++)] = CellWrite{static_cast<std::uint32_t>(cell), value};
    }
};

// Synchronous data-parallel step executor over a flat array of accumulator
// cells.
//
// Contract: within one step every lane reads the pre-step state of the cells
// and the write sets of distinct lanes are disjoint, so the post-step state
// does not depend on the order lanes run in. Between steps there is a full
// barrier. Writes are buffered during the compute phase and committed
// afterwards, which is what makes the read-old/write-new semantics hold on
// both backends. Checked mode verifies write disjointness per step.
//
// Tracing: every pardo step records its lane count as the step width;
// scalar_step records width 1. Zeroing cells at construction is storage
// allocation, not computation, and is not traced.
class PardoEngine {
  public:
    PardoEngine(std::size_t cell_count, ExecOptions opt)
        : cells_(cell_count, 0), buf_(cell_count ? cell_count : 1), opt_(opt) {
        if (opt_.checked) mark_.assign(cell_count, 0);
    }

    digit_t cell(std::size_t i) const { return cells_[i]; }
    std::span<const digit_t> cells() const { return cells_; }
    ParTrace& trace() { return trace_; }
    const ExecOptions& options() const { return opt_; }

    // One serial scalar operation (a single-digit solve or carry update),
    // counted as a width-1 step. The callable may read cells and may mutate
    // them through set_cell; it runs alone, so no disjointness rules apply.
    template <class F>
    void scalar_step(F&& f) {
        trace_.record(1);
        f();
    }

    // For use inside scalar_step only.
    void set_cell(std::size_t i, digit_t value) { cells_[i] = value; }

    // One synchronous parallel step of `lanes` independent lane functions.
    // F: (std::size_t lane) -> CellWrites; it must read cells only through
    // cell()/cells() and return its writes instead of storing them.
    template <class F>
    void pardo(std::size_t lanes, F&& f) {
        trace_.record(lanes);
        if (lanes == 0) return;
        if (buf_.size() < lanes) buf_.resize(lanes);
#if defined(_OPENMP)
        if (opt_.backend == Backend::openmp) {
            #pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(lanes); ++i) {
                buf_[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
            }
            commit(lanes);
            return;
        }
#endif
        for (std::size_t i = 0; i < lanes; ++i) buf_[i] = f(i);
        commit(lanes);
    }

  private:
    void commit(std::size_t lanes) {
        if (opt_.checked) {
            ++generation_;
            for (std::size_t i = 0; i < lanes; ++i) {
                for (int j = 0; j < buf_[i].count; ++j) {
                    const std::uint32_t c = buf_[i].w[static_cast<std::size_t>(j)].cell;
                    if (c >= cells_.size()) {
                        throw internal_error("pardo write outside the cell array");
                    }
                    if (mark_[c] == generation_) {
                        throw internal_error("overlapping writes within one pardo step");
                    }
                    mark_[c] = generation_;
                }
            }
        }
        for (std::size_t i = 0; i < lanes; ++i) {
            for (int j = 0; j < buf_[i].count; ++j) {
                const auto& w = buf_[i].w[static_cast<std::size_t>(j)];
                cells_[w.cell] = w.value;
            }
        }
    }

    std::vector<digit_t> cells_;
    std::vector<CellWrites> buf_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t generation_ = 0;
    ParTrace trace_;
    ExecOptions opt_;
};

}  // namespace ppi
