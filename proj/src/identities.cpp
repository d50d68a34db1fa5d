#include "clfcong/identities.hpp"

#include "clfcong/parallel.hpp"

namespace clfcong {

namespace {

Rational signed_power(long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && exp % 2 == 1)
        r = -r;
    return Rational(r);
}

Rational inverse(const Integer& n) { return Rational(Integer(1), n); }

} // namespace

IdentityOutcome harmonic_binomial_identity(SequenceCache& cache, unsigned long n) {
    const long ln = static_cast<long>(n);
    Rational lhs;
    for (long k = 0; k < ln; ++k) {
        Rational term(binomial(ln, k) * binomial(ln + k, k), Integer(2 * k + 1));
        term *= cache.harmonic(static_cast<unsigned long>(k));
        lhs += (k % 2 == 0) ? term : -term;
    }
    Rational alternating;
    for (long k = 1; k <= ln; ++k) {
        Rational t = inverse(k);
        alternating += (k % 2 == 0) ? t : -t;
    }
    Rational rhs = -cache.harmonic(n) * Rational(binomial(2 * ln, ln)) * signed_power(-1, n) /
                   Rational(2 * ln + 1);
    rhs += Rational(Integer(2), Integer(2 * ln + 1)) * alternating;
    return {lhs, rhs};
}

IdentityOutcome central_binomial_quarter_identity(unsigned long n) {
    const long ln = static_cast<long>(n);
    Rational lhs;
    for (long k = 0; k < ln; ++k)
        lhs += Rational(binomial(ln, k) * binomial(2 * k, k)) /
               (Rational(2 * k + 1) * signed_power(-4, static_cast<unsigned long>(k)));

    Rational squares;
    for (long k = 0; k <= ln; ++k) {
        Integer c = binomial(2 * k, k);
        squares += Rational(c * c) / signed_power(16, static_cast<unsigned long>(k));
    }
    const Integer central = binomial(2 * ln, ln);
    Rational rhs = -Rational(central) / (Rational(2 * ln + 1) * signed_power(-4, n));
    rhs += signed_power(4, n) / Rational((2 * ln + 1) * central) * squares;
    return {lhs, rhs};
}

IdentityOutcome binomial_half_power_identity(unsigned long n) {
    const long ln = static_cast<long>(n);
    Rational lhs;
    for (long k = 0; k <= ln; ++k)
        lhs += Rational(binomial(ln + k, k)) / signed_power(2, static_cast<unsigned long>(k));
    return {lhs, signed_power(2, n)};
}

IdentityOutcome hockey_stick_identity(unsigned long upper, unsigned long m) {
    if (m > upper)
        throw Error(Errc::InvalidArgument, "hockey stick identity needs m <= N");
    const long lN = static_cast<long>(upper);
    const long lm = static_cast<long>(m);
    Integer sum = 0;
    for (long k = lm; k <= lN; ++k)
        sum += binomial(k, lm);
    return {Rational(sum), Rational(binomial(lN + 1, lm + 1))};
}

IdentityOutcome harmonic_doubling_identity(SequenceCache& cache, unsigned long k) {
    return {cache.harmonic(2 * k),
            cache.harmonic(k) / Rational(2) + cache.odd_harmonic(k)};
}

namespace {

template <typename Eval>
IdentitySummary sweep(std::string id, std::string description, std::string param,
                      unsigned long first, unsigned long last, unsigned workers, Eval eval) {
    IdentitySummary s;
    s.id = std::move(id);
    s.description = std::move(description);
    s.domain = std::to_string(first) + "<=" + param + "<=" + std::to_string(last);
    if (last < first)
        return s;
    const std::size_t count = last - first + 1;
    std::vector<IdentityOutcome> outcomes(count);
    detail::parallel_for(count, workers, [&](std::size_t i) { outcomes[i] = eval(first + i); });
    s.cases = count;
    for (std::size_t i = 0; i < count; ++i) {
        if (outcomes[i].holds())
            continue;
        if (s.failures++ == 0)
            s.first_failure = IdentityCounterexample{param + "=" + std::to_string(first + i),
                                                     outcomes[i].lhs, outcomes[i].rhs};
    }
    return s;
}

// Every pair 0 <= m <= N <= bound. For fixed m the partial sums over N are
// accumulated once and compared against C(N+1, m+1) at each N.
IdentitySummary hockey_sweep(unsigned long bound, unsigned workers) {
    IdentitySummary s;
    s.id = "hockey-stick";
    s.description = "sum_{k=m}^{N} C(k,m) = C(N+1,m+1)";
    s.domain = "0<=m<=N<=" + std::to_string(bound);
    struct Row {
        std::size_t failures = 0;
        std::optional<IdentityCounterexample> first;
    };
    std::vector<Row> rows(bound + 1);
    detail::parallel_for(bound + 1, workers, [&](std::size_t m) {
        const long lm = static_cast<long>(m);
        Integer sum = 0;
        for (long upper = lm; upper <= static_cast<long>(bound); ++upper) {
            sum += binomial(upper, lm);
            Integer expected = binomial(upper + 1, lm + 1);
            if (sum != expected && rows[m].failures++ == 0)
                rows[m].first = IdentityCounterexample{
                    "N=" + std::to_string(upper) + ",m=" + std::to_string(m), Rational(sum),
                    Rational(expected)};
        }
    });
    for (auto& r : rows) {
        s.failures += r.failures;
        if (!s.first_failure && r.first)
            s.first_failure = r.first;
    }
    s.cases = (bound + 1) * (bound + 2) / 2;
    return s;
}

} // namespace

std::vector<IdentitySummary> run_identities(SequenceCache& cache, const IdentitySweepOptions& options) {
    if (options.bound < 1)
        throw Error(Errc::InvalidArgument, "identity bound must be >= 1");
    const auto bound = options.bound;
    const auto workers = options.workers;
    SequenceDemand demand;
    demand.harmonic = static_cast<long>(2 * bound);
    demand.odd_harmonic = static_cast<long>(bound);
    cache.prewarm(demand);

    std::vector<IdentitySummary> out;
    out.push_back(sweep("harmonic-binomial",
                        "sum_{k<n} C(n,k)C(n+k,k)(-1)^k H_k/(2k+1) = "
                        "-H_n C(2n,n)(-1)^n/(2n+1) + 2/(2n+1) sum_{k=1}^n (-1)^k/k",
                        "n", 1, bound, workers,
                        [&](unsigned long n) { return harmonic_binomial_identity(cache, n); }));
    out.push_back(sweep("central-binomial-quarter",
                        "sum_{k<n} C(n,k)C(2k,k)/((2k+1)(-4)^k) = -C(2n,n)/((2n+1)(-4)^n) + "
                        "4^n/((2n+1)C(2n,n)) sum_{k<=n} C(2k,k)^2/16^k",
                        "n", 1, bound, workers,
                        [](unsigned long n) { return central_binomial_quarter_identity(n); }));
    out.push_back(sweep("binomial-half-power", "sum_{k<=n} C(n+k,k)/2^k = 2^n", "n", 0,
                        bound, workers, [](unsigned long n) { return binomial_half_power_identity(n); }));
    out.push_back(hockey_sweep(bound, workers));
    out.push_back(sweep("harmonic-doubling", "H_{2k} = H_k/2 + sum_{j=1}^k 1/(2j-1)",
                        "k", 0, bound, workers,
                        [&](unsigned long k) { return harmonic_doubling_identity(cache, k); }));
    return out;
}

} // namespace clfcong
