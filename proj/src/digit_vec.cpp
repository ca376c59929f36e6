#include "ppi/digit_vec.hpp"

#include <algorithm>
#include <cassert>

namespace ppi {

namespace {

void strip_high_zeros(std::vector<digit_t>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

void require_same_radix(const DigitVec& a, const DigitVec& b) {
    if (a.radix() != b.radix()) {
        throw domain_error("operands have different radixes");
    }
}

}  // namespace

DigitVec DigitVec::from_digits(std::vector<digit_t> digits, Radix radix) {
    const digit_t beta = radix.beta();
    for (digit_t d : digits) {
        if (d < 0 || d >= beta) {
            throw domain_error("digit " + std::to_string(d) + " out of range for radix " +
                               std::to_string(beta));
        }
    }
    strip_high_zeros(digits);
    DigitVec v(radix);
    v.digits_ = std::move(digits);
    return v;
}

DigitVec from_decimal_string(std::string_view text, Radix radix) {
    if (text.empty()) {
        throw domain_error("empty numeral");
    }
    const digit_t beta = radix.beta();
    std::vector<digit_t> acc;  // little-endian, radix beta
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw domain_error(std::string("invalid character '") + c + "' in decimal numeral");
        }
        // acc = acc * 10 + (c - '0'), in radix beta.
        digit_t carry = c - '0';
        for (auto& d : acc) {
            const digit_t t = d * 10 + carry;
            d = t % beta;
            carry = t / beta;
        }
        while (carry != 0) {
            acc.push_back(carry % beta);
            carry /= beta;
        }
        if (acc.size() > kMaxDigits) {
            throw limit_error("numeral exceeds the configured size limit");
        }
    }
    strip_high_zeros(acc);
    return DigitVec::from_digits(std::move(acc), radix);
}

std::string to_decimal_string(const DigitVec& x) {
    if (x.is_zero()) return "0";
    const digit_t beta = x.radix().beta();
    std::vector<digit_t> work = x.digits();
    std::string out;
    while (!work.empty()) {
        // Divide work by 10 in place, most significant digit first.
        digit_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            const digit_t cur = rem * beta + work[i];  // rem < 10, fits 64 bits
            work[i] = cur / 10;
            rem = cur % 10;
        }
        out.push_back(static_cast<char>('0' + rem));
        strip_high_zeros(work);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

DigitVec from_integer(std::uint64_t value, Radix radix) {
    const auto beta = static_cast<std::uint64_t>(radix.beta());
    std::vector<digit_t> d;
    while (value != 0) {
        d.push_back(static_cast<digit_t>(value % beta));
        value /= beta;
    }
    return DigitVec::from_digits(std::move(d), radix);
}

std::size_t digit_count(const DigitVec& x) { return x.digit_count(); }

DigitVec truncate_mod_power(const DigitVec& x, std::size_t s) {
    if (x.digit_count() <= s) return x;
    std::vector<digit_t> d(x.digits().begin(), x.digits().begin() + static_cast<std::ptrdiff_t>(s));
    return DigitVec::from_digits(std::move(d), x.radix());
}

std::vector<digit_t> pad_to(const DigitVec& x, std::size_t s) {
    std::vector<digit_t> d(s, 0);
    const std::size_t n = std::min(s, x.digit_count());
    std::copy_n(x.digits().begin(), n, d.begin());
    return d;
}

StripResult strip_beta_power(const DigitVec& x) {
    if (x.is_zero()) {
        throw domain_error("cannot strip radix powers from zero");
    }
    std::size_t q = 0;
    while (x.digit(q) == 0) ++q;
    return StripResult{q, shift_down(x, q)};
}

DigitVec shift_up(const DigitVec& x, std::size_t q) {
    if (x.is_zero() || q == 0) return x;
    std::vector<digit_t> d(q, 0);
    d.insert(d.end(), x.digits().begin(), x.digits().end());
    return DigitVec::from_digits(std::move(d), x.radix());
}

DigitVec shift_down(const DigitVec& x, std::size_t q) {
    if (q >= x.digit_count()) return DigitVec(x.radix());
    std::vector<digit_t> d(x.digits().begin() + static_cast<std::ptrdiff_t>(q), x.digits().end());
    return DigitVec::from_digits(std::move(d), x.radix());
}

int compare(const DigitVec& a, const DigitVec& b) {
    require_same_radix(a, b);
    if (a.digit_count() != b.digit_count()) {
        return a.digit_count() < b.digit_count() ? -1 : 1;
    }
    for (std::size_t i = a.digit_count(); i-- > 0;) {
        if (a.digit(i) != b.digit(i)) return a.digit(i) < b.digit(i) ? -1 : 1;
    }
    return 0;
}

DigitVec add(const DigitVec& a, const DigitVec& b) {
    require_same_radix(a, b);
    const digit_t beta = a.radix().beta();
    const std::size_t n = std::max(a.digit_count(), b.digit_count());
    std::vector<digit_t> d(n + 1, 0);
    digit_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const digit_t t = a.digit(i) + b.digit(i) + carry;
        d[i] = t % beta;
        carry = t / beta;
    }
    d[n] = carry;
    return DigitVec::from_digits(std::move(d), a.radix());
}

DigitVec sub(const DigitVec& a, const DigitVec& b) {
    require_same_radix(a, b);
    if (compare(a, b) < 0) {
        throw domain_error("subtraction underflow");
    }
    const digit_t beta = a.radix().beta();
    std::vector<digit_t> d(a.digit_count(), 0);
    digit_t borrow = 0;
    for (std::size_t i = 0; i < a.digit_count(); ++i) {
        digit_t t = a.digit(i) - b.digit(i) - borrow;
        borrow = 0;
        if (t < 0) {
            t += beta;
            borrow = 1;
        }
        d[i] = t;
    }
    assert(borrow == 0);
    return DigitVec::from_digits(std::move(d), a.radix());
}

DigitVec scalar_mul(const DigitVec& a, digit_t d) {
    const digit_t beta = a.radix().beta();
    if (d < 0 || d >= beta) {
        throw domain_error("scalar multiplier out of digit range");
    }
    if (d == 0 || a.is_zero()) return DigitVec(a.radix());
    std::vector<digit_t> out(a.digit_count() + 1, 0);
    digit_t carry = 0;
    for (std::size_t i = 0; i < a.digit_count(); ++i) {
        const digit_t t = a.digit(i) * d + carry;  // < beta^2 + beta, fits 64 bits
        out[i] = t % beta;
        carry = t / beta;
    }
    out[a.digit_count()] = carry;
    return DigitVec::from_digits(std::move(out), a.radix());
}

DigitVec mod_sub_pow(const DigitVec& a, const DigitVec& b, std::size_t e) {
    require_same_radix(a, b);
    if (a.digit_count() > e || b.digit_count() > e) {
        throw domain_error("mod_sub_pow operands must already be below beta^e");
    }
    const digit_t beta = a.radix().beta();
    std::vector<digit_t> d(e, 0);
    digit_t borrow = 0;
    // Computing over exactly e positions and dropping the final borrow yields
    // (a - b) mod beta^e.
    for (std::size_t i = 0; i < e; ++i) {
        digit_t t = a.digit(i) - b.digit(i) - borrow;
        borrow = 0;
        if (t < 0) {
            t += beta;
            borrow = 1;
        }
        d[i] = t;
    }
    return DigitVec::from_digits(std::move(d), a.radix());
}

DigitVec power_of_beta(Radix radix, std::size_t e) {
    if (e > kMaxDigits) {
        throw limit_error("exponent exceeds the configured size limit");
    }
    std::vector<digit_t> d(e + 1, 0);
    d[e] = 1;
    return DigitVec::from_digits(std::move(d), radix);
}

namespace {

// Compare t * beta^j against r.
int compare_shifted(const DigitVec& t, std::size_t j, const DigitVec& r) {
    const std::size_t tn = t.is_zero() ? 0 : t.digit_count() + j;
    if (tn != r.digit_count()) return tn < r.digit_count() ? -1 : 1;
    for (std::size_t i = tn; i-- > 0;) {
        const digit_t td = i >= j ? t.digit(i - j) : 0;
        if (td != r.digit(i)) return td < r.digit(i) ? -1 : 1;
    }
    return 0;
}

// r - t * beta^j, requires r >= t * beta^j.
DigitVec sub_shifted(const DigitVec& r, const DigitVec& t, std::size_t j) {
    const digit_t beta = r.radix().beta();
    std::vector<digit_t> d = r.digits();
    digit_t borrow = 0;
    for (std::size_t i = j; i < d.size(); ++i) {
        digit_t x = d[i] - t.digit(i - j) - borrow;
        borrow = 0;
        if (x < 0) {
            x += beta;
            borrow = 1;
        }
        d[i] = x;
    }
    assert(borrow == 0);
    return DigitVec::from_digits(std::move(d), r.radix());
}

}  // namespace

DivModResult divmod(const DigitVec& a, const DigitVec& b) {
    require_same_radix(a, b);
    if (b.is_zero()) {
        throw domain_error("division by zero");
    }
    if (compare(a, b) < 0) {
        return DivModResult{DigitVec(a.radix()), a};
    }
    const digit_t beta = a.radix().beta();
    const std::size_t positions = a.digit_count() - b.digit_count() + 1;
    std::vector<digit_t> q(positions, 0);
    DigitVec rem = a;
    for (std::size_t j = positions; j-- > 0;) {
        // Largest digit d with d * b * beta^j <= rem, by binary search.
        digit_t lo = 0, hi = beta - 1;
        while (lo < hi) {
            const digit_t mid = lo + (hi - lo + 1) / 2;
            if (compare_shifted(scalar_mul(b, mid), j, rem) <= 0) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        q[j] = lo;
        if (lo != 0) rem = sub_shifted(rem, scalar_mul(b, lo), j);
    }
    return DivModResult{DigitVec::from_digits(std::move(q), a.radix()), rem};
}

DigitVec gcd(const DigitVec& a, const DigitVec& b) {
    require_same_radix(a, b);
    DigitVec x = a, y = b;
    while (!y.is_zero()) {
        DigitVec r = divmod(x, y).rem;
        x = y;
        y = r;
    }
    return x;
}

}  // namespace ppi
