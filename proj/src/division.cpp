#include "ppi/division.hpp"

#include "ppi/errors.hpp"

namespace ppi {

std::string_view algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::seqmodiv: return "seqmodiv";
        case Algorithm::ppi: return "ppi";
        case Algorithm::parmodiv: return "parmodiv";
        case Algorithm::parppi1: return "parppi1";
        case Algorithm::parppi2: return "parppi2";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "seqmodiv") return Algorithm::seqmodiv;
    if (name == "ppi") return Algorithm::ppi;
    if (name == "parmodiv") return Algorithm::parmodiv;
    if (name == "parppi1") return Algorithm::parppi1;
    if (name == "parppi2") return Algorithm::parppi2;
    return std::nullopt;
}

DivisionRun run_division(Algorithm alg, const DigitVec& u, const DigitVec& v, std::size_t s,
                         ExecOptions opt) {
    const ModDivProblem p(u, v, s);
    switch (alg) {
        case Algorithm::seqmodiv:
            return DivisionRun{seq_modiv(p, opt), std::nullopt};
        case Algorithm::ppi:
            return DivisionRun{ppi_sequential(p, opt), std::nullopt};
        case Algorithm::parmodiv: {
            ParResult r = par_modiv(p, opt);
            return DivisionRun{std::move(r.x), r.trace};
        }
        case Algorithm::parppi1: {
            ParResult r = par_ppi_v1(p, opt);
            return DivisionRun{std::move(r.x), r.trace};
        }
        case Algorithm::parppi2: {
            ParResult r = par_ppi_v2(p, opt);
            return DivisionRun{std::move(r.x), r.trace};
        }
    }
    throw domain_error("unknown algorithm");
}

}  // namespace ppi
