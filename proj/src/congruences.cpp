#include "clfcong/congruences.hpp"

#include <algorithm>
#include <map>

#include "clfcong/parallel.hpp"

namespace clfcong {

namespace {

void require_p_free(const Rational& x, const Integer& p, const char* side, const std::string& where) {
    if (mpz_divisible_p(x.den().get_mpz_t(), p.get_mpz_t())) {
        auto v = padic_valuation(x.den(), p).value;
        throw DenominatorDivisibleByP(v, where + ": " + side + " denominator has valuation " +
                                             std::to_string(v) + " at p=" + to_string(p));
    }
}

} // namespace

VerificationReport verify(const CongruenceCheck& check, unsigned long p, SequenceCache& cache,
                          const VerifyOptions& options) {
    if (!check.applicable(p))
        throw Error(Errc::NotApplicable, check.id + " does not apply to p=" + std::to_string(p));

    const auto start = std::chrono::steady_clock::now();
    const Integer prime = p;
    auto instances = check.evaluate(cache, p);

    VerificationReport report;
    report.check = check.id;
    report.p = p;
    report.instances = instances.size();
    report.pass = true;

    std::map<unsigned, PrimePowerModulus> moduli;
    bool have_witness = false;
    long best_margin = 0;
    for (auto& inst : instances) {
        const std::string where = check.id + " instance " + std::to_string(inst.index);
        Rational rhs = inst.rhs + Rational(options.rhs_shift);
        require_p_free(inst.lhs, prime, "lhs", where);
        require_p_free(rhs, prime, "rhs", where);

        const unsigned long cap = inst.exponent + kValuationHeadroom;
        const Rational diff = inst.lhs - rhs;
        const unsigned long v = padic_valuation_capped(diff.num(), prime, cap);
        const long margin = static_cast<long>(v) - static_cast<long>(inst.exponent);
        if (margin < 0)
            report.pass = false;
        if (have_witness && margin >= best_margin)
            continue;
        have_witness = true;
        best_margin = margin;

        auto it = moduli.find(inst.exponent);
        if (it == moduli.end())
            it = moduli.emplace(inst.exponent, PrimePowerModulus(prime, inst.exponent)).first;
        report.exponent = inst.exponent;
        report.lhs_residue = reduce(inst.lhs, it->second).value();
        report.rhs_residue = reduce(rhs, it->second).value();
        report.valuation = v;
        report.valuation_capped = (v == cap);
        report.witness_index = inst.index;
    }
    if (!have_witness)
        report.exponent = check.exponent;
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

std::vector<VerificationReport> verify_range(std::span<const CongruenceCheck* const> checks,
                                             std::span<const unsigned long> primes,
                                             SequenceCache& cache, unsigned workers) {
    std::vector<unsigned long> sorted(primes.begin(), primes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    struct Pair {
        const CongruenceCheck* check;
        unsigned long p;
    };
    std::vector<Pair> pairs;
    SequenceDemand demand;
    for (const auto* check : checks)
        for (unsigned long p : sorted)
            if (check->applicable(p)) {
                pairs.push_back({check, p});
                demand.merge(check->demand(p));
            }
    cache.prewarm(demand);

    std::vector<VerificationReport> out(pairs.size());
    detail::parallel_for(pairs.size(), workers, [&](std::size_t i) {
        const auto& [check, p] = pairs[i];
        try {
            out[i] = verify(*check, p, cache);
        } catch (const std::exception& e) {
            VerificationReport failed;
            failed.check = check->id;
            failed.p = p;
            failed.exponent = check->exponent;
            failed.error = e.what();
            out[i] = std::move(failed);
        }
    });
    return out;
}

bool derivation_chain_holds(SequenceCache& cache, unsigned long p) {
    auto lhs_of = [&](const char* id) {
        const CongruenceCheck* c = find_check(id);
        if (!c->applicable(p))
            throw Error(Errc::NotApplicable, std::string(id) + " does not apply to p=" + std::to_string(p));
        return c->evaluate(cache, p).front().lhs;
    };
    const Rational h2k = lhs_of("C-1-4");
    const Rational hk = lhs_of("C-1-3");
    const Rational plain = lhs_of("C-1-1");
    const Rational weighted = lhs_of("C-2-5");
    const PrimePowerModulus m(Integer(p), 2);
    const Rational prime(Integer{p});
    return reduce(prime * h2k, m) == reduce(prime / Rational(2) * hk + plain - weighted, m);
}

} // namespace clfcong
