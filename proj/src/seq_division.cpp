#include "ppi/seq_division.hpp"

#include <cassert>

#include "ppi/errors.hpp"

namespace ppi {

ModDivProblem::ModDivProblem(DigitVec u_in, DigitVec v_in, std::size_t s_in)
    : u(std::move(u_in)), v(std::move(v_in)), s(s_in) {
    if (u.radix() != v.radix()) {
        throw domain_error("numerator and divisor radixes differ");
    }
    if (s < 1 || s > kMaxDigits) {
        throw domain_error("output digit count must be in [1, size limit]");
    }
    digit_mod_inverse(v.digit(0), v.radix());  // invertibility gate
}

DigitVec seq_modiv(const ModDivProblem& p, ExecOptions opt) {
    const digit_t beta = p.radix().beta();
    const digit_t a = digit_mod_inverse(p.v.digit(0), p.radix()).value;

    DigitVec work = truncate_mod_power(p.u, p.s);
    std::vector<digit_t> x(p.s, 0);
    for (std::size_t k = 0; k < p.s; ++k) {
        const std::size_t e = p.s - k;
        x[k] = a * work.digit(0) % beta;
        // work := (work - x_k * v mod beta^e) / beta
        const DigitVec prod = truncate_mod_power(scalar_mul(truncate_mod_power(p.v, e), x[k]), e);
        const DigitVec diff = mod_sub_pow(work, prod, e);
        if (opt.checked && diff.digit(0) != 0) {
            throw internal_error("seq_modiv: difference not divisible by the radix");
        }
        work = shift_down(diff, 1);
    }
    return DigitVec::from_digits(std::move(x), p.radix());
}

namespace detail {

DigitVec ppi_sequential_impl(const ModDivProblem& p, ExecOptions opt, bool digit_cutoff,
                             SeqPpiTrace* trace) {
    const digit_t beta = p.radix().beta();
    const digit_t a = digit_mod_inverse(p.v.digit(0), p.radix()).value;
    const std::size_t s = p.s;

    const std::vector<digit_t> u = pad_to(truncate_mod_power(p.u, s), s);
    const DigitVec v_trunc = truncate_mod_power(p.v, s);
    const std::vector<digit_t> v = pad_to(v_trunc, s);
    const std::size_t m = v_trunc.digit_count();  // >= 1 since v0 is invertible

    std::vector<digit_t> x(s, 0);
    x[0] = a * u[0] % beta;
    wide_t carry = static_cast<wide_t>(x[0] * v[0]) / static_cast<wide_t>(beta);
    if (trace) {
        trace->accumulators.assign(1, 0);
        trace->carries.assign(1, carry);
    }
    for (std::size_t k = 1; k < s; ++k) {
        const std::size_t mu = digit_cutoff ? std::min(k, m - 1) : k;
        wide_t acc = carry;
        for (std::size_t j = 1; j <= mu; ++j) {
            acc += static_cast<wide_t>(v[j] * x[k - j]);
        }
        // x_k = a * ((u_k - L_k) mod beta) mod beta, with a mathematically
        // correct (nonnegative) mod of the signed difference.
        const swide_t diff = static_cast<swide_t>(u[k]) - static_cast<swide_t>(acc);
        digit_t diff_mod = static_cast<digit_t>(diff % beta);
        if (diff_mod < 0) diff_mod += beta;
        x[k] = a * diff_mod % beta;
        const wide_t next = (acc + static_cast<wide_t>(x[k] * v[0])) / static_cast<wide_t>(beta);
        if (opt.checked) {
            // Carry identity: L_k + x_k * v_0 == u_k + beta * c_{k+1}.
            const wide_t lhs = acc + static_cast<wide_t>(x[k] * v[0]);
            const wide_t rhs = static_cast<wide_t>(u[k]) + static_cast<wide_t>(beta) * next;
            if (lhs != rhs) {
                throw internal_error("ppi_sequential: carry identity violated");
            }
        }
        carry = next;
        if (trace) {
            trace->accumulators.push_back(acc);
            trace->carries.push_back(carry);
        }
    }
    return DigitVec::from_digits(std::move(x), p.radix());
}

}  // namespace detail

PreprocessResult preprocess_numerator(const ModDivProblem& p) {
    if (p.u.is_zero()) {
        return PreprocessResult{0, std::nullopt};
    }
    const StripResult stripped = strip_beta_power(p.u);
    if (stripped.q >= p.s) {
        return PreprocessResult{stripped.q, std::nullopt};
    }
    return PreprocessResult{stripped.q,
                            ModDivProblem(stripped.rest, p.v, p.s - stripped.q)};
}

DigitVec ppi_sequential(const ModDivProblem& p, ExecOptions opt) {
    const PreprocessResult pre = preprocess_numerator(p);
    if (!pre.reduced) {
        return DigitVec(p.radix());
    }
    return shift_up(detail::ppi_sequential_impl(*pre.reduced, opt, true, nullptr), pre.q);
}

}  // namespace ppi
