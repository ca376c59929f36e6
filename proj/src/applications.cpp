#include "ppi/applications.hpp"

#include <numeric>

#include "ppi/errors.hpp"
#include "ppi/par_division.hpp"
#include "ppi/pardo.hpp"

namespace ppi {

namespace {

void require_same_radix(const DigitVec& a, const DigitVec& b) {
    if (a.radix() != b.radix()) {
        throw domain_error("operands have different radixes");
    }
}

digit_t solve_digit(digit_t a, digit_t u_k, digit_t acc, digit_t beta) {
    digit_t diff = (u_k - acc) % beta;
    if (diff < 0) diff += beta;
    return a * diff % beta;
}

// One alternated-carry lane: push the even cell's overflow up, keep its
// residue.
CellWrites carry_pair(const PardoEngine& eng, std::size_t lo, digit_t beta) {
    CellWrites w;
    w.set(lo + 1, eng.cell(lo + 1) + eng.cell(lo) / beta);
    w.set(lo, eng.cell(lo) % beta);
    return w;
}

}  // namespace

DigitVec exact_div(const DigitVec& u, const DigitVec& v, ExecOptions opt) {
    require_same_radix(u, v);
    if (v.is_zero()) {
        throw domain_error("exact division by zero");
    }
    if (u.is_zero()) {
        return DigitVec(u.radix());
    }
    const StripResult sv = strip_beta_power(v);
    const StripResult su = strip_beta_power(u);
    if (su.q < sv.q) {
        throw domain_error("v does not divide u");
    }
    // Remove the common radix power; the leftover numerator keeps its excess.
    const DigitVec uu = shift_down(u, sv.q);
    const DigitVec& vv = sv.rest;
    if (std::gcd(vv.digit(0), u.radix().beta()) != 1) {
        throw domain_error("exact division unsupported: stripped divisor shares a factor with the radix");
    }
    if (uu.digit_count() < vv.digit_count()) {
        throw domain_error("v does not divide u");
    }
    const std::size_t s = uu.digit_count() - vv.digit_count() + 1;
    DigitVec q = par_ppi_v2(ModDivProblem(uu, vv, s), opt).x;
    if (opt.checked && !(par_mul(q, vv).product == uu)) {
        throw domain_error("v does not divide u");
    }
    return q;
}

DmodResult dmod(const DigitVec& u, const DigitVec& v, ExecOptions opt, ParTrace* trace_out) {
    require_same_radix(u, v);
    const Radix radix = u.radix();
    const digit_t beta = radix.beta();
    const std::size_t s = u.digit_count();
    const std::size_t t = v.digit_count();
    if (t < 1 || s < t) {
        throw domain_error("dmod requires digit_count(u) >= digit_count(v) >= 1");
    }
    const digit_t a = digit_mod_inverse(v.digit(0), radix).value;
    const std::size_t r = s - t + 1;

    // x*v and the complemented u are treated as s+1 digit numbers; cell s+1
    // is the guard whose final value flags the sign of x*v - u.
    PardoEngine eng(s + 2, opt);
    const std::vector<digit_t> ud = pad_to(u, s + 1);  // sets u_s = 0
    const std::vector<digit_t>& vd = v.digits();

    std::vector<digit_t> x(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
        eng.scalar_step([&] { x[k] = solve_digit(a, ud[k], eng.cell(k), beta); });
        eng.pardo(t, [&](std::size_t i) {
            CellWrites w;
            w.set(k + i, eng.cell(k + i) + x[k] * vd[i]);
            return w;
        });
        eng.pardo((s - k - 1) / 2 + 1,
                  [&](std::size_t n) { return carry_pair(eng, k + 2 * n, beta); });
    }
    // Fold in u's high digits by radix complement; positions r..s together
    // contribute beta^(s+1) - (u - u mod beta^r).
    eng.pardo(s - r + 1, [&](std::size_t i) {
        const std::size_t pos = r + i;
        CellWrites w;
        w.set(pos, eng.cell(pos) + beta_complement_digit(ud[pos], pos, r, radix));
        return w;
    });
    for (std::size_t k = r; k <= s; ++k) {
        eng.pardo((s - k) / 2 + 1, [&](std::size_t n) { return carry_pair(eng, k + 2 * n, beta); });
    }

    std::vector<digit_t> wd(t, 0);
    for (std::size_t i = 0; i < t; ++i) wd[i] = eng.cell(r + i);
    const digit_t guard = eng.cell(s + 1);
    if (opt.checked) {
        if (guard != 0 && guard != 1) {
            throw internal_error("dmod: guard cell is not a 0/1 flag");
        }
        for (digit_t d : wd) {
            if (d < 0 || d >= beta) throw internal_error("dmod: residual digit out of range");
        }
    }
    DigitVec w_pre = DigitVec::from_digits(std::move(wd), radix);
    DigitVec x_vec = DigitVec::from_digits(std::move(x), radix);

    DmodResult out{x_vec, DigitVec(radix), Sign::zero, r};
    if (guard == 0) {
        // x*v - u == w - beta^t < 0; the true residual is the complement.
        out.w = sub(power_of_beta(radix, t), w_pre);
        out.sign = Sign::negative;
    } else {
        out.w = w_pre;
        out.sign = w_pre.is_zero() ? Sign::zero : Sign::positive;
    }
    if (opt.checked) {
        // Reassembly: x*v - u == sign * w * beta^r, via the independent
        // multiplication route.
        const DigitVec xv = par_mul(out.x, v).product;
        const int cmp = compare(xv, u);
        const DigitVec residual = cmp >= 0 ? sub(xv, u) : sub(u, xv);
        const bool sign_ok = (cmp == 0 && out.sign == Sign::zero) ||
                             (cmp > 0 && out.sign == Sign::positive) ||
                             (cmp < 0 && out.sign == Sign::negative);
        if (!sign_ok || !(residual == shift_up(out.w, r))) {
            throw internal_error("dmod: reassembly identity violated");
        }
    }
    if (trace_out) *trace_out = eng.trace();
    return out;
}

MulResult par_mul(const DigitVec& u, const DigitVec& v, ExecOptions opt) {
    require_same_radix(u, v);
    const Radix radix = u.radix();
    const digit_t beta = radix.beta();
    const std::size_t s = u.digit_count();
    const std::size_t t = v.digit_count();
    if (s == 0 || t == 0) {
        return MulResult{DigitVec(radix), ParTrace{}};
    }
    PardoEngine eng(s + t + 1, opt);
    const std::vector<digit_t>& ud = u.digits();
    const std::vector<digit_t>& vd = v.digits();

    // Accumulation rounds: one row of partial products per divisor digit,
    // each followed by an alternated-carry sweep over the row's window.
    for (std::size_t k = 0; k < t; ++k) {
        eng.pardo(s, [&](std::size_t i) {
            CellWrites w;
            w.set(k + i, eng.cell(k + i) + vd[k] * ud[i]);
            return w;
        });
        eng.pardo((s - 1) / 2 + 1, [&](std::size_t n) { return carry_pair(eng, k + 2 * n, beta); });
    }
    // Drain rounds: sweeps only, settling one cell per round.
    for (std::size_t k = t; k < s + t; ++k) {
        eng.pardo((s + t - k - 1) / 2 + 1,
                  [&](std::size_t n) { return carry_pair(eng, k + 2 * n, beta); });
    }
    std::vector<digit_t> prod(s + t, 0);
    for (std::size_t i = 0; i < s + t; ++i) prod[i] = eng.cell(i);
    if (opt.checked) {
        if (eng.cell(s + t) != 0) {
            throw internal_error("par_mul: nonzero overflow past the product width");
        }
        for (digit_t d : prod) {
            if (d < 0 || d >= beta) throw internal_error("par_mul: product digit out of range");
        }
    }
    return MulResult{DigitVec::from_digits(std::move(prod), radix), eng.trace()};
}

HenselStream::HenselStream(DigitVec u, DigitVec v) : u_(std::move(u)), v_(std::move(v)) {
    require_same_radix(u_, v_);
    inverse_ = digit_mod_inverse(v_.digit(0), v_.radix()).value;
}

digit_t HenselStream::next() {
    const digit_t beta = v_.radix().beta();
    const std::size_t k = x_.size();
    if (k == 0) {
        const digit_t x0 = inverse_ * u_.digit(0) % beta;
        carry_ = static_cast<wide_t>(x0 * v_.digit(0)) / static_cast<wide_t>(beta);
        x_.push_back(x0);
        return x0;
    }
    const std::size_t m = v_.digit_count();
    wide_t acc = carry_;
    for (std::size_t j = 1; j <= std::min(k, m - 1); ++j) {
        acc += static_cast<wide_t>(v_.digit(j) * x_[k - j]);
    }
    const swide_t diff = static_cast<swide_t>(u_.digit(k)) - static_cast<swide_t>(acc);
    digit_t diff_mod = static_cast<digit_t>(diff % beta);
    if (diff_mod < 0) diff_mod += beta;
    const digit_t xk = inverse_ * diff_mod % beta;
    carry_ = (acc + static_cast<wide_t>(xk * v_.digit(0))) / static_cast<wide_t>(beta);
    x_.push_back(xk);
    return xk;
}

HenselCode hensel_code(const DigitVec& u, const DigitVec& v, std::size_t s) {
    if (s < 1 || s > kMaxDigits) {
        throw domain_error("precision must be in [1, size limit]");
    }
    HenselStream stream(u, v);
    for (std::size_t i = 0; i < s; ++i) stream.next();
    return HenselCode{stream.digits(), u.radix(), s};
}

std::size_t multiplicative_order(Radix radix, const DigitVec& modulus, std::size_t cap) {
    const DigitVec one = from_integer(1, radix);
    if (modulus.digit_count() == 0 || compare(modulus, one) == 0) {
        throw domain_error("multiplicative order requires a modulus >= 2");
    }
    if (std::gcd(modulus.digit(0), radix.beta()) != 1) {
        throw domain_error("radix shares a factor with the modulus");
    }
    if (cap < 1) {
        throw domain_error("order search cap must be positive");
    }
    DigitVec residue = divmod(power_of_beta(radix, 1), modulus).rem;
    std::size_t t = 1;
    while (!(residue == one)) {
        if (t >= cap) {
            throw limit_error("multiplicative order exceeds the search cap");
        }
        residue = divmod(shift_up(residue, 1), modulus).rem;
        ++t;
    }
    return t;
}

PeriodResult rational_period(const DigitVec& u, const DigitVec& v, std::size_t max_t,
                             ExecOptions opt) {
    require_same_radix(u, v);
    if (u.is_zero() || compare(u, v) >= 0) {
        throw domain_error("period requires 0 < u < v");
    }
    // Reduce the fraction first; the period depends on the reduced
    // denominator.
    const DigitVec g = gcd(u, v);
    const DigitVec u_red = divmod(u, g).quot;
    const DigitVec v_red = divmod(v, g).quot;
    if (std::gcd(v_red.digit(0), u.radix().beta()) != 1) {
        throw domain_error("expansion is not purely periodic: denominator shares a factor with the radix");
    }
    const std::size_t t = multiplicative_order(u.radix(), v_red, max_t);
    // T == -u/v (mod beta^t), with -u represented as beta^t - u_red to stay
    // in nonnegative digit vectors (u_red < v_red < beta^t).
    const DigitVec negated = sub(power_of_beta(u.radix(), t), u_red);
    const DigitVec period = par_ppi_v2(ModDivProblem(negated, v_red, t), opt).x;
    if (opt.checked) {
        const DigitVec lhs =
            par_mul(u_red, sub(power_of_beta(u.radix(), t), from_integer(1, u.radix()))).product;
        const DigitVec rhs = par_mul(v_red, period).product;
        if (!(lhs == rhs)) {
            throw internal_error("rational_period: cross-multiplication identity violated");
        }
    }
    return PeriodResult{t, period, pad_to(period, t)};
}

}  // namespace ppi
