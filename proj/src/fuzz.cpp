#include "ppi/fuzz.hpp"

#include <numeric>

#include "ppi/division.hpp"
#include "ppi/oracle.hpp"

namespace ppi {

namespace {

std::vector<digit_t> random_digits(std::mt19937_64& rng, digit_t beta, std::size_t count) {
    std::uniform_int_distribution<digit_t> dist(0, beta - 1);
    std::vector<digit_t> d(count);
    for (auto& x : d) x = dist(rng);
    return d;
}

DigitVec random_divisor(std::mt19937_64& rng, Radix radix, std::size_t max_len) {
    const digit_t beta = radix.beta();
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<digit_t> digit_dist(0, beta - 1);
    std::vector<digit_t> d = random_digits(rng, beta, len_dist(rng));
    do {
        d[0] = digit_dist(rng);
    } while (std::gcd(d[0], beta) != 1);
    if (d.size() > 1 && d.back() == 0) d.back() = 1;
    return DigitVec::from_digits(std::move(d), radix);
}

}  // namespace

RandomProblem random_problem(std::mt19937_64& rng, Radix radix, std::size_t max_s,
                             bool coprime_low_digit) {
    const digit_t beta = radix.beta();
    std::uniform_int_distribution<std::size_t> s_dist(1, max_s);
    const std::size_t s = s_dist(rng);
    DigitVec v = random_divisor(rng, radix, s + 2);

    std::uniform_int_distribution<int> shape(0, 15);
    DigitVec u(radix);
    switch (coprime_low_digit ? 15 : shape(rng)) {
        case 0:  // zero numerator
            break;
        case 1:  // u == v
            u = v;
            break;
        case 2: {  // divisible by the radix
            std::uniform_int_distribution<std::size_t> q_dist(1, s + 1);
            u = shift_up(random_divisor(rng, radix, s), q_dist(rng));
            break;
        }
        case 3: {  // u + v == 0 (mod beta^s): forces the all-(beta-1) quotient
            const DigitVec vs = truncate_mod_power(v, s);
            u = vs.is_zero() ? DigitVec(radix) : sub(power_of_beta(radix, s), vs);
            u = truncate_mod_power(u, s);
            break;
        }
        default: {
            std::uniform_int_distribution<std::size_t> len_dist(0, 2 * s);
            u = DigitVec::from_digits(random_digits(rng, beta, len_dist(rng)), radix);
            if (coprime_low_digit) {
                std::vector<digit_t> d = pad_to(u, std::max<std::size_t>(s, 1));
                std::uniform_int_distribution<digit_t> digit_dist(1, beta - 1);
                d[0] = digit_dist(rng);
                if (d.back() == 0) d.back() = 1;
                u = DigitVec::from_digits(std::move(d), radix);
            }
            break;
        }
    }
    return RandomProblem{std::move(u), std::move(v), s};
}

FuzzOutcome run_differential_fuzz(const FuzzConfig& config) {
    static constexpr Algorithm kAlgorithms[] = {Algorithm::seqmodiv, Algorithm::ppi,
                                                Algorithm::parmodiv, Algorithm::parppi1,
                                                Algorithm::parppi2};
    std::mt19937_64 rng(config.seed);
    FuzzOutcome out;
    ExecOptions opt{config.backend, config.checked};
    for (std::size_t i = 0; i < config.count; ++i) {
        const Radix radix(config.radixes[i % config.radixes.size()]);
        const RandomProblem prob = random_problem(rng, radix, config.max_s);
        ++out.cases;

        const oracle::Int u_ref = oracle::from_digit_vec(prob.u);
        const oracle::Int v_ref = oracle::from_digit_vec(prob.v);
        const DigitVec expected =
            oracle::to_digit_vec(oracle::modiv(u_ref, v_ref, radix, prob.s), radix);

        bool ok = true;
        std::string detail;
        for (const Algorithm alg : kAlgorithms) {
            DigitVec got = run_division(alg, prob.u, prob.v, prob.s, opt).x;
            if (config.tamper && i == 0 && alg == Algorithm::parppi2) {
                const digit_t flipped = (got.digit(0) + 1) % radix.beta();
                std::vector<digit_t> d = pad_to(got, prob.s);
                d[0] = flipped;
                got = DigitVec::from_digits(std::move(d), radix);
            }
            if (!(got == expected)) {
                ok = false;
                detail += std::string(algorithm_name(alg)) + "=" + to_decimal_string(got) + " ";
            }
        }
        // (x*v - u) mod beta^s == 0 under reference arithmetic.
        const oracle::Int x_ref = oracle::from_digit_vec(expected);
        const oracle::Int pow = oracle::pow_of(radix.beta(), prob.s);
        if ((x_ref * v_ref - u_ref) % pow != 0) {
            ok = false;
            detail += "reference-residue-nonzero ";
        }
        if (!ok) {
            ++out.mismatches;
            out.reports.push_back("case=" + std::to_string(i) + " seed=" +
                                  std::to_string(config.seed) + " beta=" +
                                  std::to_string(radix.beta()) + " s=" + std::to_string(prob.s) +
                                  " u=" + to_decimal_string(prob.u) + " v=" +
                                  to_decimal_string(prob.v) + " expected=" +
                                  to_decimal_string(expected) + " " + detail);
        }
    }
    return out;
}

}  // namespace ppi
