// ppi: command-line frontend for the modular-division family and its
// applications (exact division, dmod, multiplication, radix-adic digits,
// periods), plus differential fuzzing and a trace/time benchmark.
//
// Exit status: 0 success, 1 precondition or diagnostic failure, 2 internal
// invariant violation.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppi/applications.hpp"
#include "ppi/division.hpp"
#include "ppi/fuzz.hpp"
#include "ppi/oracle.hpp"

namespace {

using namespace ppi;

struct CommonOpts {
    digit_t radix = 10;
    bool checked = false;
    std::string backend = "serial";
    std::string format = "decimal";
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_format = true) {
    cmd->add_option("--radix", c.radix, "Radix beta (>= 2)")
        ->envname("PPI_RADIX")
        ->capture_default_str();
    cmd->add_flag("--checked", c.checked, "Validate internal invariants while running");
    cmd->add_option("--backend", c.backend, "Parallel step executor")
        ->check(CLI::IsMember({"serial", "openmp"}))
        ->capture_default_str();
    if (with_format) {
        cmd->add_option("--format", c.format, "Output format")
            ->check(CLI::IsMember({"decimal", "digits-lsf", "digits-msf", "trace-record"}))
            ->capture_default_str();
    }
}

ExecOptions exec_options(const CommonOpts& c) {
    return ExecOptions{c.backend == "openmp" ? Backend::openmp : Backend::serial, c.checked};
}

std::string join_digits(const std::vector<digit_t>& digits, bool msf) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0) out += ' ';
        out += std::to_string(digits[msf ? digits.size() - 1 - i : i]);
    }
    return out;
}

// Result printing for the value-producing commands. Digit formats pad to
// `positions` when given, so a modular quotient always shows its s digit
// positions.
void print_value(const DigitVec& x, const std::string& format,
                 std::optional<std::size_t> positions) {
    if (format == "decimal" || format == "trace-record") {
        std::cout << to_decimal_string(x) << "\n";
        return;
    }
    const std::vector<digit_t> digits =
        positions ? pad_to(x, *positions)
                  : (x.is_zero() ? std::vector<digit_t>{0} : x.digits());
    std::cout << join_digits(digits, format == "digits-msf") << "\n";
}

char sign_char(Sign s) {
    switch (s) {
        case Sign::negative: return '-';
        case Sign::zero: return '0';
        case Sign::positive: return '+';
    }
    return '?';
}

double run_ms(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int do_main(int argc, char** argv) {
    CLI::App app{"Modular division (u/v mod beta^s) and friends, least-significant digit first"};
    app.require_subcommand(1);

    // ---- modiv ----
    auto* modiv = app.add_subcommand("modiv", "Modular division u/v mod beta^s");
    struct {
        std::string u, v, alg = "parppi2";
        std::size_t s = 0;
        CommonOpts c;
    } mo;
    modiv->add_option("u", mo.u, "Numerator (decimal)")->required();
    modiv->add_option("v", mo.v, "Divisor (decimal)")->required();
    modiv->add_option("--s,-s", mo.s, "Number of output digits")->required();
    modiv->add_option("--alg", mo.alg, "Algorithm")
        ->check(CLI::IsMember({"seqmodiv", "ppi", "parmodiv", "parppi1", "parppi2", "oracle"}))
        ->capture_default_str();
    add_common(modiv, mo.c);
    modiv->callback([&] {
        const Radix radix(mo.c.radix);
        const DigitVec u = from_decimal_string(mo.u, radix);
        const DigitVec v = from_decimal_string(mo.v, radix);
        if (mo.alg == "oracle") {
            if (mo.c.format == "trace-record") {
                throw domain_error("the oracle records no trace");
            }
            const auto x = oracle::modiv(oracle::from_digit_vec(u), oracle::from_digit_vec(v),
                                         radix, mo.s);
            print_value(oracle::to_digit_vec(x, radix), mo.c.format, mo.s);
            return;
        }
        const Algorithm alg = *parse_algorithm(mo.alg);
        const DivisionRun run = run_division(alg, u, v, mo.s, exec_options(mo.c));
        print_value(run.x, mo.c.format, mo.s);
        if (mo.c.format == "trace-record") {
            if (!run.trace) {
                throw domain_error("trace-record needs a parallel algorithm (parmodiv, parppi1, parppi2)");
            }
            std::cout << trace_record(mo.alg, radix, mo.s, *run.trace) << "\n";
        }
    });

    // ---- ediv ----
    auto* ediv = app.add_subcommand("ediv", "Exact division u/v (remainder known to be zero)");
    struct {
        std::string u, v;
        CommonOpts c;
    } ed;
    ediv->add_option("u", ed.u)->required();
    ediv->add_option("v", ed.v)->required();
    add_common(ediv, ed.c);
    ediv->callback([&] {
        const Radix radix(ed.c.radix);
        const DigitVec q = exact_div(from_decimal_string(ed.u, radix),
                                     from_decimal_string(ed.v, radix), exec_options(ed.c));
        print_value(q, ed.c.format, std::nullopt);
    });

    // ---- dmod ----
    auto* dm = app.add_subcommand("dmod", "Digit modulus: x = u/v mod beta^r and w = |xv-u|/beta^r");
    struct {
        std::string u, v;
        CommonOpts c;
    } dd;
    dm->add_option("u", dd.u)->required();
    dm->add_option("v", dd.v)->required();
    add_common(dm, dd.c, /*with_format=*/false);
    dm->callback([&] {
        const Radix radix(dd.c.radix);
        const DmodResult r = dmod(from_decimal_string(dd.u, radix),
                                  from_decimal_string(dd.v, radix), exec_options(dd.c));
        std::cout << "x=" << to_decimal_string(r.x) << " w=" << to_decimal_string(r.w)
                  << " sign=" << sign_char(r.sign) << " r=" << r.r << "\n";
    });

    // ---- mul ----
    auto* mul = app.add_subcommand("mul", "Product u*v by the linear-width accumulate scheme");
    struct {
        std::string u, v;
        CommonOpts c;
    } mm;
    mul->add_option("u", mm.u)->required();
    mul->add_option("v", mm.v)->required();
    add_common(mul, mm.c);
    mul->callback([&] {
        const Radix radix(mm.c.radix);
        const DigitVec u = from_decimal_string(mm.u, radix);
        const DigitVec v = from_decimal_string(mm.v, radix);
        const MulResult r = par_mul(u, v, exec_options(mm.c));
        print_value(r.product, mm.c.format, std::nullopt);
        if (mm.c.format == "trace-record") {
            std::cout << trace_record("parmul", radix, std::max(u.digit_count(), v.digit_count()),
                                      r.trace)
                      << "\n";
        }
    });

    // ---- hensel ----
    auto* hensel = app.add_subcommand("hensel", "First s digits of the beta-adic expansion of u/v");
    struct {
        std::string u, v;
        std::size_t s = 0;
        CommonOpts c;
    } he;
    hensel->add_option("u", he.u)->required();
    hensel->add_option("v", he.v)->required();
    hensel->add_option("--s,-s", he.s, "Digit count")->required();
    add_common(hensel, he.c, /*with_format=*/false);
    hensel->callback([&] {
        const Radix radix(he.c.radix);
        const HenselCode code = hensel_code(from_decimal_string(he.u, radix),
                                            from_decimal_string(he.v, radix), he.s);
        std::cout << join_digits(code.digits, /*msf=*/false) << "\n";
    });

    // ---- period ----
    auto* period = app.add_subcommand("period", "Repeating digit block of u/v in radix beta");
    struct {
        std::string u, v;
        std::size_t cap = 65536;
        CommonOpts c;
    } pe;
    period->add_option("u", pe.u)->required();
    period->add_option("v", pe.v)->required();
    period->add_option("--cap", pe.cap, "Period length search cap")->capture_default_str();
    add_common(period, pe.c, /*with_format=*/false);
    period->callback([&] {
        const Radix radix(pe.c.radix);
        const PeriodResult r = rational_period(from_decimal_string(pe.u, radix),
                                               from_decimal_string(pe.v, radix), pe.cap,
                                               exec_options(pe.c));
        std::cout << "t=" << r.t << " T=" << to_decimal_string(r.period) << "\n";
    });

    // ---- fuzz ----
    auto* fuzz = app.add_subcommand("fuzz", "Differential fuzz of all algorithms vs the oracle");
    struct {
        std::size_t count = 1000;
        std::uint64_t seed = 1;
        std::size_t max_s = 64;
        digit_t radix = 0;  // 0: cycle the standard radix set
        bool tamper = false;
        CommonOpts c;
    } fz;
    fuzz->add_option("count", fz.count, "Number of cases")->capture_default_str();
    fuzz->add_option("--seed", fz.seed, "Generator seed")->capture_default_str();
    fuzz->add_option("--max-s", fz.max_s, "Largest output digit count")->capture_default_str();
    fuzz->add_option("--radix", fz.radix, "Single radix (default: cycle 2,3,10,257,65536)");
    fuzz->add_flag("--tamper", fz.tamper)->group("");  // checker self-test
    fuzz->add_flag("--checked", fz.c.checked, "Validate internal invariants while running");
    fuzz->add_option("--backend", fz.c.backend)->check(CLI::IsMember({"serial", "openmp"}));
    fuzz->callback([&] {
        FuzzConfig config;
        config.seed = fz.seed;
        config.count = fz.count;
        config.max_s = fz.max_s;
        config.checked = fz.c.checked;
        config.backend = exec_options(fz.c).backend;
        config.tamper = fz.tamper;
        if (fz.radix != 0) config.radixes = {fz.radix};
        const FuzzOutcome outcome = run_differential_fuzz(config);
        std::cout << outcome.mismatches << " mismatches\n";
        for (const auto& line : outcome.reports) std::cerr << line << "\n";
        if (outcome.mismatches != 0) {
            std::exit(1);
        }
    });

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "Emit one trace record per (algorithm, s)");
    struct {
        std::vector<std::size_t> sizes;
        std::string alg = "parppi2";
        std::uint64_t seed = 1;
        bool time = false;
        bool compare = false;
        CommonOpts c;
    } be;
    bench->add_option("--sizes", be.sizes, "Comma-separated list of s values")->delimiter(',');
    bench->add_option("--alg", be.alg, "parmodiv, parppi1, parppi2 or all")
        ->check(CLI::IsMember({"parmodiv", "parppi1", "parppi2", "all"}))
        ->capture_default_str();
    bench->add_option("--seed", be.seed)->capture_default_str();
    bench->add_flag("--time", be.time, "Append wall time per run");
    bench->add_flag("--compare-backends", be.compare, "Run serial and openmp, appending columns");
    add_common(bench, be.c, /*with_format=*/false);
    bench->callback([&] {
        const Radix radix(be.c.radix);
        std::vector<std::string> algs;
        if (be.alg == "all") {
            algs = {"parmodiv", "parppi1", "parppi2"};
        } else {
            algs = {be.alg};
        }
        std::vector<std::string> backends{be.c.backend};
        if (be.compare) backends = {"serial", "openmp"};
        for (const auto& alg_name : algs) {
            const Algorithm alg = *parse_algorithm(alg_name);
            for (const std::size_t s : be.sizes) {
                std::mt19937_64 rng(be.seed * 0x9e3779b97f4a7c15ULL + s);
                const RandomProblem prob =
                    random_problem(rng, radix, s, /*coprime_low_digit=*/true);
                for (const auto& backend : backends) {
                    ExecOptions opt{backend == "openmp" ? Backend::openmp : Backend::serial,
                                    be.c.checked};
                    DivisionRun run{DigitVec(radix), std::nullopt};
                    const double ms = run_ms([&] {
                        run = run_division(alg, prob.u, prob.v, s, opt);
                    });
                    std::cout << trace_record(alg_name, radix, s, *run.trace);
                    if (be.compare) std::cout << " backend=" << backend;
                    if (be.time || be.compare) {
                        std::cout << " ms=" << std::fixed << std::setprecision(3) << ms;
                    }
                    std::cout << "\n";
                }
            }
        }
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return do_main(argc, argv);
    } catch (const ppi::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const ppi::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
