#include "ppi/oracle.hpp"

#include <map>

#include "ppi/errors.hpp"

namespace ppi::oracle {

Int from_digit_vec(const DigitVec& x) {
    const Int beta = x.radix().beta();
    Int acc = 0;
    for (std::size_t i = x.digit_count(); i-- > 0;) {
        acc = acc * beta + x.digit(i);
    }
    return acc;
}

DigitVec to_digit_vec(const Int& value, Radix radix) {
    if (value < 0) {
        throw domain_error("digit vectors represent nonnegative integers only");
    }
    const Int beta = radix.beta();
    std::vector<digit_t> d;
    for (Int v = value; v != 0; v /= beta) {
        d.push_back(static_cast<digit_t>(v % beta));
    }
    return DigitVec::from_digits(std::move(d), radix);
}

Int from_decimal(const std::string& text) { return Int(text); }

std::string to_decimal(const Int& value) { return value.str(); }

std::size_t digit_length(const Int& value, Radix radix) {
    const Int beta = radix.beta();
    std::size_t n = 0;
    for (Int v = value; v != 0; v /= beta) ++n;
    return n;
}

Int mul(const Int& a, const Int& b) { return a * b; }

std::pair<Int, Int> divmod(const Int& a, const Int& b) {
    if (b < 1) {
        throw domain_error("oracle divmod requires a positive divisor");
    }
    return {a / b, a % b};
}

Int pow_of(digit_t beta, std::size_t t) {
    Int r = 1;
    for (std::size_t i = 0; i < t; ++i) r *= beta;
    return r;
}

Int modinv(const Int& v, const Int& m) {
    if (m < 2) {
        throw domain_error("modulus must be at least 2");
    }
    Int r0 = v % m, r1 = m;
    if (r0 < 0) r0 += m;
    Int t0 = 1, t1 = 0;
    while (r1 != 0) {
        const Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 != 1) {
        throw not_invertible_error("value is not invertible for the given modulus");
    }
    Int a = t0 % m;
    if (a < 0) a += m;
    return a;
}

Int modiv(const Int& u, const Int& v, Radix radix, std::size_t s) {
    if (u < 0 || v <= 0) {
        throw domain_error("modiv operands must be nonnegative with v > 0");
    }
    const Int beta = radix.beta();
    if (boost::multiprecision::gcd(v, beta) != 1) {
        throw not_invertible_error("divisor shares a factor with the radix");
    }
    if (u == 0 || s == 0) return 0;
    // Strip u = beta^q * u'.
    std::size_t q = 0;
    Int uu = u;
    while (q < s && uu % beta == 0) {
        uu /= beta;
        ++q;
    }
    if (q >= s) return 0;
    const Int mod = pow_of(radix.beta(), s - q);
    const Int x = (uu % mod) * modinv(v, mod) % mod;
    return x * pow_of(radix.beta(), q);
}

LongDivPeriod period_longdiv(const Int& u, const Int& v, Radix radix, std::size_t cap) {
    if (!(u > 0 && u < v)) {
        throw domain_error("period requires 0 < u < v");
    }
    const Int beta = radix.beta();
    const Int g = boost::multiprecision::gcd(u, v);
    if (boost::multiprecision::gcd(Int(v / g), beta) != 1) {
        throw domain_error("expansion is not purely periodic: denominator shares a factor with the radix");
    }
    // r_k = u * beta^k mod v; purely periodic, so the first remainder recurs.
    std::vector<digit_t> digits;
    Int r = u;
    do {
        if (digits.size() >= cap) {
            throw limit_error("period search cap exceeded");
        }
        const Int scaled = r * beta;
        digits.push_back(static_cast<digit_t>(scaled / v));
        r = scaled % v;
    } while (r != u);
    return LongDivPeriod{digits.size(), std::move(digits)};
}

}  // namespace ppi::oracle
