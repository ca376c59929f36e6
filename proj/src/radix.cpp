#include "ppi/radix.hpp"

namespace ppi {

DigitInverse digit_mod_inverse(digit_t v0, Radix radix) {
    const digit_t beta = radix.beta();
    if (v0 < 0 || v0 >= beta) {
        throw domain_error("digit out of range for radix " + std::to_string(beta));
    }
    // Extended Euclid on (v0, beta), tracking only the coefficient of v0.
    digit_t r0 = v0, r1 = beta;
    digit_t t0 = 1, t1 = 0;
    while (r1 != 0) {
        const digit_t q = r0 / r1;
        const digit_t r2 = r0 - q * r1;
        const digit_t t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw not_invertible_error("digit " + std::to_string(v0) + " is not invertible modulo " +
                                   std::to_string(beta));
    }
    digit_t a = t0 % beta;
    if (a < 0) a += beta;
    return DigitInverse{a};
}

digit_t beta_complement_digit(digit_t u_k, std::size_t k, std::size_t r, Radix radix) {
    const digit_t beta = radix.beta();
    if (u_k < 0 || u_k >= beta) {
        throw domain_error("digit out of range for radix " + std::to_string(beta));
    }
    if (k < r) {
        throw domain_error("beta complement is defined only at positions k >= r");
    }
    return k == r ? beta - u_k : beta - 1 - u_k;
}

}  // namespace ppi
