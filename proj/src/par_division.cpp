#include "ppi/par_division.hpp"

#include <cassert>

#include "ppi/errors.hpp"

namespace ppi {

namespace {

// Floor division and the matching nonnegative remainder, for the signed
// carry-save arithmetic of par_modiv.
digit_t floor_div(digit_t a, digit_t b) {
    digit_t q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

digit_t solve_digit(digit_t a, digit_t u_k, digit_t acc, digit_t beta) {
    digit_t diff = (u_k - acc) % beta;
    if (diff < 0) diff += beta;
    return a * diff % beta;
}

// Checked-mode bound sweep for the alternated-carry state. `pre_sweep`
// selects the post-multiply peaks (2b^2-b-1 even offsets, b^2-b odd); the
// post-sweep bounds are b-1 even and b^2+b-2 odd. Cells are classified by
// offset parity relative to the current round k. The top cell at index s is
// outside the sweep range and only ever collects overflow; it is held to a
// separate linear bound instead (see the note in par_ppi_v2_core).
void check_alt_carry_bounds(const PardoEngine& eng, std::size_t k, std::size_t s, digit_t beta,
                            bool pre_sweep) {
    // 2b^2-b-1 written without the 2b^2 intermediate, which would overflow
    // a signed 64-bit word at the radix cap.
    const digit_t even_bound = pre_sweep ? (beta * beta - beta - 1) + beta * beta : beta - 1;
    const digit_t odd_bound = pre_sweep ? beta * beta - beta : beta * beta + beta - 2;
    for (std::size_t p = k; p < s; ++p) {
        const bool even_offset = ((p - k) % 2) == 0;
        if (eng.cell(p) > (even_offset ? even_bound : odd_bound)) {
            throw internal_error("alternated-carry cell bound violated");
        }
    }
    const digit_t guard_bound = (beta - 1) * static_cast<digit_t>(s + 2);
    if (eng.cell(s) > guard_bound) {
        throw internal_error("alternated-carry guard cell bound violated");
    }
    if (!pre_sweep) {
        // Storage budget: one digit per even-offset cell, at most three per
        // odd-offset cell, at most 2s digits across the live region.
        std::uint64_t digits_used = k;  // settled cells below k hold one digit each
        for (std::size_t p = k; p < s; ++p) {
            digits_used += ((p - k) % 2) == 0 ? 1 : 3;
        }
        if (digits_used > 2 * static_cast<std::uint64_t>(s)) {
            throw internal_error("alternated-carry storage budget exceeded");
        }
    }
}

}  // namespace

namespace detail {

ParResult par_modiv_core(const ModDivProblem& p, ExecOptions opt) {
    const digit_t beta = p.radix().beta();
    const digit_t a = digit_mod_inverse(p.v.digit(0), p.radix()).value;
    const std::size_t s = p.s;

    // Cell layout: u digits at [0, s), carries y at [s, 2s], i.e. y_i is
    // cell s + i. The u digits stay in [0, beta); the y cells are signed.
    PardoEngine eng(2 * s + 1, opt);
    const auto u_at = [](std::size_t i) { return i; };
    const auto y_at = [s](std::size_t i) { return s + i; };

    {
        const std::vector<digit_t> u0 = pad_to(truncate_mod_power(p.u, s), s);
        for (std::size_t i = 0; i < s; ++i) eng.set_cell(u_at(i), u0[i]);
    }
    const std::vector<digit_t> v = pad_to(truncate_mod_power(p.v, s), s);

    std::vector<digit_t> x(s, 0);
    for (std::size_t k = 0; k + 1 < s; ++k) {
        eng.scalar_step([&] { x[k] = a * eng.cell(u_at(k)) % beta; });
        // Serial update of the first carry.
        eng.scalar_step([&] {
            eng.set_cell(y_at(k + 1), eng.cell(y_at(k + 1)) - x[k] * v[0] / beta);
        });
        eng.pardo(s - k - 1, [&](std::size_t lane) {
            const std::size_t i = lane + 1;
            const digit_t t = eng.cell(u_at(k + i)) - x[k] * v[i] + eng.cell(y_at(k + i));
            CellWrites w;
            w.set(y_at(k + i + 1), floor_div(t, beta));
            w.set(u_at(k + i), t - floor_div(t, beta) * beta);
            return w;
        });
        if (opt.checked) {
            for (std::size_t i = 0; i < s; ++i) {
                if (eng.cell(u_at(i)) < 0 || eng.cell(u_at(i)) >= beta) {
                    throw internal_error("par_modiv: numerator digit out of range");
                }
            }
            for (std::size_t i = 0; i <= s; ++i) {
                const digit_t y = eng.cell(y_at(i));
                if (y <= -beta * beta || y >= beta * beta) {
                    throw internal_error("par_modiv: carry exceeds a signed double digit");
                }
            }
        }
    }
    eng.scalar_step([&] { x[s - 1] = a * eng.cell(u_at(s - 1)) % beta; });
    return ParResult{DigitVec::from_digits(std::move(x), p.radix()), eng.trace()};
}

ParResult par_ppi_v1_core(const ModDivProblem& p, ExecOptions opt) {
    const digit_t beta = p.radix().beta();
    const digit_t a = digit_mod_inverse(p.v.digit(0), p.radix()).value;
    const std::size_t s = p.s;

    // Cell layout: L at [0, s], y at [s + 1, 2s + 1].
    PardoEngine eng(2 * s + 2, opt);
    const auto l_at = [](std::size_t i) { return i; };
    const auto y_at = [s](std::size_t i) { return s + 1 + i; };

    const std::vector<digit_t> u = pad_to(truncate_mod_power(p.u, s), s);
    const std::vector<digit_t> v = pad_to(truncate_mod_power(p.v, s), s);

    std::vector<digit_t> x(s, 0);
    for (std::size_t k = 0; k + 1 < s; ++k) {
        eng.scalar_step([&] {
            x[k] = solve_digit(a, u[k], eng.cell(l_at(k)) + eng.cell(y_at(k)), beta);
        });
        // All carries update inside the one pardo; L + x*v + y <= beta^2 - 1
        // keeps every cell a single nonnegative digit.
        eng.pardo(s - k, [&](std::size_t i) {
            const digit_t t = eng.cell(l_at(k + i)) + x[k] * v[i] + eng.cell(y_at(k + i));
            CellWrites w;
            w.set(y_at(k + i + 1), t / beta);
            w.set(l_at(k + i), t % beta);
            return w;
        });
        if (opt.checked) {
            for (std::size_t i = 0; i < eng.cells().size(); ++i) {
                if (eng.cell(i) < 0 || eng.cell(i) >= beta) {
                    throw internal_error("par_ppi_v1: cell exceeds one nonnegative digit");
                }
            }
        }
    }
    eng.scalar_step([&] {
        x[s - 1] = solve_digit(a, u[s - 1], eng.cell(l_at(s - 1)) + eng.cell(y_at(s - 1)), beta);
    });
    return ParResult{DigitVec::from_digits(std::move(x), p.radix()), eng.trace()};
}

ParResult par_ppi_v2_core(const ModDivProblem& p, ExecOptions opt) {
    const digit_t beta = p.radix().beta();
    const digit_t a = digit_mod_inverse(p.v.digit(0), p.radix()).value;
    const std::size_t s = p.s;

    // L cells 0..s. Index s is a guard cell: the carry sweep can write it
    // but never reduces it modulo beta, so unlike the interior cells it is
    // not held to the beta^2 + beta - 2 bound. It only ever receives
    // div-beta overflow (at most 2*beta - 2 every other round), giving the
    // linear bound (beta - 1) * (s + 2) asserted in checked mode. It never
    // feeds a digit solve, so the output is unaffected.
    PardoEngine eng(s + 1, opt);

    const std::vector<digit_t> u = pad_to(truncate_mod_power(p.u, s), s);
    const std::vector<digit_t> v = pad_to(truncate_mod_power(p.v, s), s);

    std::vector<digit_t> x(s, 0);
    for (std::size_t k = 0; k + 1 < s; ++k) {
        eng.scalar_step([&] { x[k] = solve_digit(a, u[k], eng.cell(k), beta); });
        eng.pardo(s - k, [&](std::size_t i) {
            CellWrites w;
            w.set(k + i, eng.cell(k + i) + x[k] * v[i]);
            return w;
        });
        if (opt.checked) check_alt_carry_bounds(eng, k, s, beta, /*pre_sweep=*/true);
        // Alternated carries: even-offset cells push their overflow into the
        // odd-offset neighbour above.
        eng.pardo((s - k - 1) / 2 + 1, [&](std::size_t n) {
            const std::size_t lo = k + 2 * n;
            CellWrites w;
            w.set(lo + 1, eng.cell(lo + 1) + eng.cell(lo) / beta);
            w.set(lo, eng.cell(lo) % beta);
            return w;
        });
        if (opt.checked) check_alt_carry_bounds(eng, k, s, beta, /*pre_sweep=*/false);
    }
    eng.scalar_step([&] { x[s - 1] = solve_digit(a, u[s - 1], eng.cell(s - 1), beta); });
    return ParResult{DigitVec::from_digits(std::move(x), p.radix()), eng.trace()};
}

}  // namespace detail

ParResult par_modiv(const ModDivProblem& p, ExecOptions opt) {
    return detail::par_modiv_core(p, opt);
}

namespace {

ParResult with_preprocessing(const ModDivProblem& p, ExecOptions opt,
                             ParResult (*core)(const ModDivProblem&, ExecOptions)) {
    const PreprocessResult pre = preprocess_numerator(p);
    if (!pre.reduced) {
        return ParResult{DigitVec(p.radix()), ParTrace{}};
    }
    ParResult r = core(*pre.reduced, opt);
    r.x = shift_up(r.x, pre.q);
    return r;
}

}  // namespace

ParResult par_ppi_v1(const ModDivProblem& p, ExecOptions opt) {
    return with_preprocessing(p, opt, &detail::par_ppi_v1_core);
}

ParResult par_ppi_v2(const ModDivProblem& p, ExecOptions opt) {
    return with_preprocessing(p, opt, &detail::par_ppi_v2_core);
}

std::string trace_record(std::string_view algorithm, Radix radix, std::size_t s,
                         const ParTrace& trace) {
    std::string out;
    out += "algorithm=";
    out += algorithm;
    out += " beta=" + std::to_string(radix.beta());
    out += " s=" + std::to_string(s);
    out += " steps=" + std::to_string(trace.steps);
    out += " max_width=" + std::to_string(trace.max_width);
    out += " work=" + std::to_string(trace.work);
    return out;
}

}  // namespace ppi
