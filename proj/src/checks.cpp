#include "clfcong/congruences.hpp"

#include <algorithm>

namespace clfcong {

namespace {

using Instances = std::vector<CongruenceInstance>;

bool odd_prime(unsigned long p) { return p > 2 && is_prime(Integer(p)); }
bool prime_above_three(unsigned long p) { return p > 3 && is_prime(Integer(p)); }

long half(unsigned long p) { return static_cast<long>((p - 1) / 2); }

Rational power(long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && exp % 2 == 1)
        r = -r;
    return Rational(r);
}

// C(2k,k)^2 / 16^k
Rational squared_central_over_16(long k) {
    Integer c = binomial(2 * k, k);
    return Rational(c * c) / power(16, static_cast<unsigned long>(k));
}

Rational frac(long num, long den) { return Rational(Integer(num), Integer(den)); }

Instances single(Rational lhs, Rational rhs, unsigned e) {
    return {CongruenceInstance{0, std::move(lhs), std::move(rhs), e}};
}

SequenceDemand need(long bernoulli, long euler, long harmonic = -1, long odd_harmonic = -1,
                    long clf = -1) {
    return {bernoulli, euler, harmonic, odd_harmonic, clf};
}

// Shared pieces of the right-hand sides.
struct Terms {
    Rational p;
    Rational q;     // Fermat quotient q_p(2)
    Rational leg;   // (-1/p)
    Rational e_pm3; // E_{p-3}
    Rational b_pm3; // B_{p-3}

    Terms(SequenceCache& cache, unsigned long prime, bool with_bernoulli = true)
        : p(Integer(prime)),
          q(fermat_quotient_two(prime)),
          leg(legendre_minus_one(prime)),
          e_pm3(cache.euler(prime - 3)),
          b_pm3(with_bernoulli ? cache.bernoulli(prime - 3) : Rational()) {}
};

Rational euler_shift_gap(SequenceCache& cache, unsigned long p, const Rational& e_pm3) {
    // E_{2p-4} - 2 E_{p-3}
    return Rational(cache.euler(2 * p - 4)) - Rational(2) * e_pm3;
}

std::vector<CongruenceCheck> build_registry() {
    std::vector<CongruenceCheck> r;

    r.push_back({"C-1-1",
                 "sum_{k=0}^{(p-3)/2} C(2k,k)^2/((2k+1)16^k) == -2q_p(2) - p q_p(2)^2 + (5/12) p^2 B_{p-3}",
                 3, prime_above_three,
                 [](unsigned long p) { return need(static_cast<long>(p) - 3, -1); },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (long k = 0; k <= half(p) - 1; ++k)
                         lhs += squared_central_over_16(k) / Rational(2 * k + 1);
                     Terms t(cache, p);
                     Rational rhs = Rational(-2) * t.q - t.p * t.q * t.q +
                                    frac(5, 12) * t.p * t.p * t.b_pm3;
                     return single(lhs, rhs, 3);
                 }});

    r.push_back({"C-1-2", "sum_{k=0}^{(p-1)/2} C(2k,k)^2/16^k == (-1)^((p-1)/2) + p^2 E_{p-3}", 3,
                 prime_above_three,
                 [](unsigned long p) { return need(-1, static_cast<long>(p) - 3); },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (long k = 0; k <= half(p); ++k)
                         lhs += squared_central_over_16(k);
                     Terms t(cache, p, false);
                     return single(lhs, t.leg + t.p * t.p * t.e_pm3, 3);
                 }});

    r.push_back({"C-1-3",
                 "sum_{k=0}^{(p-3)/2} C(2k,k)^2 H_k/((2k+1)16^k) == 4q_p(2)^2 + 2(-1/p)(E_{2p-4} - 2E_{p-3}) + "
                 "(7/12) p B_{p-3}",
                 2, prime_above_three,
                 [](unsigned long p) {
                     return need(static_cast<long>(p) - 3, 2 * static_cast<long>(p) - 4, half(p));
                 },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (long k = 0; k <= half(p) - 1; ++k)
                         lhs += squared_central_over_16(k) * cache.harmonic(static_cast<unsigned long>(k)) /
                                Rational(2 * k + 1);
                     Terms t(cache, p);
                     Rational rhs = Rational(4) * t.q * t.q +
                                    Rational(2) * t.leg * euler_shift_gap(cache, p, t.e_pm3) +
                                    frac(7, 12) * t.p * t.b_pm3;
                     return single(lhs, rhs, 2);
                 }});

    r.push_back({"C-1-4", "sum_{k=0}^{(p-3)/2} C(2k,k)^2 H_{2k}/((2k+1)16^k) == -2(-1/p) E_{p-3}", 1,
                 prime_above_three,
                 [](unsigned long p) {
                     return need(-1, static_cast<long>(p) - 3, static_cast<long>(p) - 3);
                 },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (long k = 0; k <= half(p) - 1; ++k)
                         lhs += squared_central_over_16(k) *
                                cache.harmonic(static_cast<unsigned long>(2 * k)) / Rational(2 * k + 1);
                     Terms t(cache, p, false);
                     return single(lhs, Rational(-2) * t.leg * t.e_pm3, 1);
                 }});

    r.push_back({"C-REMARK", "sum_{k=1}^{(p-1)/2} C(2k,k)^2 H_{2k}/(k 16^k) == 4(-1/p) E_{p-3}", 1,
                 prime_above_three,
                 [](unsigned long p) {
                     return need(-1, static_cast<long>(p) - 3, static_cast<long>(p) - 1);
                 },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (long k = 1; k <= half(p); ++k)
                         lhs += squared_central_over_16(k) *
                                cache.harmonic(static_cast<unsigned long>(2 * k)) / Rational(k);
                     Terms t(cache, p, false);
                     return single(lhs, Rational(4) * t.leg * t.e_pm3, 1);
                 }});

    r.push_back({"C-1-5", "sum_{k=0}^{p-1} P_k/8^k == 1 + 2(-1/p) p^2 E_{p-3}", 3, odd_prime,
                 [](unsigned long p) {
                     return need(-1, static_cast<long>(p) - 3, -1, -1, static_cast<long>(p) - 1);
                 },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (unsigned long k = 0; k < p; ++k)
                         lhs += Rational(cache.clf(k)) / power(8, k);
                     Terms t(cache, p, false);
                     return single(lhs, Rational(1) + Rational(2) * t.leg * t.p * t.p * t.e_pm3, 3);
                 }});

    r.push_back({"C-1-6", "sum_{k=0}^{p-1} P_k/16^k == (-1/p) - p^2 E_{p-3}", 3, odd_prime,
                 [](unsigned long p) {
                     return need(-1, static_cast<long>(p) - 3, -1, -1, static_cast<long>(p) - 1);
                 },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (unsigned long k = 0; k < p; ++k)
                         lhs += Rational(cache.clf(k)) / power(16, k);
                     Terms t(cache, p, false);
                     return single(lhs, t.leg - t.p * t.p * t.e_pm3, 3);
                 }});

    r.push_back({"C-2-1",
                 "for 0<=k<=n=(p-1)/2: C(n,k) / (C(2k,k)/(-4)^k) == 1 - p sum_{j=1}^k 1/(2j-1)  (mod p^2)", 2,
                 odd_prime, [](unsigned long p) { return need(-1, -1, -1, half(p)); },
                 [](SequenceCache& cache, unsigned long p) {
                     const long n = half(p);
                     Instances out;
                     for (long k = 0; k <= n; ++k) {
                         Rational lhs = Rational(binomial(n, k)) * power(-4, static_cast<unsigned long>(k)) /
                                        Rational(binomial(2 * k, k));
                         Rational rhs = Rational(1) - Rational(Integer(p)) *
                                                          cache.odd_harmonic(static_cast<unsigned long>(k));
                         out.push_back({k, lhs, rhs, 2});
                     }
                     return out;
                 }});

    r.push_back({"C-2-2", "for 0<=k<=n=(p-1)/2: C(n,k) C(n+k,k) (-1)^k == C(2k,k)^2/16^k  (mod p^2)", 2,
                 odd_prime, [](unsigned long) { return SequenceDemand{}; },
                 [](SequenceCache&, unsigned long p) {
                     const long n = half(p);
                     Instances out;
                     for (long k = 0; k <= n; ++k) {
                         Integer lhs = binomial(n, k) * binomial(n + k, k);
                         if (k % 2 == 1)
                             lhs = -lhs;
                         out.push_back({k, Rational(lhs), squared_central_over_16(k), 2});
                     }
                     return out;
                 }});

    r.push_back({"C-L22-A",
                 "sum_{1<=k<p/4} 1/k == -3q_p(2) + p(3/2 q_p(2)^2 + (-1)^((p-1)/2)(E_{2p-4} - 2E_{p-3})) - "
                 "p^2(q_p(2)^3 + 7/12 B_{p-3})",
                 3, prime_above_three,
                 [](unsigned long p) {
                     return need(static_cast<long>(p) - 3, 2 * static_cast<long>(p) - 4);
                 },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (unsigned long k = 1; 4 * k < p; ++k)
                         lhs += Rational(Integer(1), Integer(k));
                     Terms t(cache, p);
                     Rational q2 = t.q * t.q;
                     Rational rhs = Rational(-3) * t.q +
                                    t.p * (frac(3, 2) * q2 + t.leg * euler_shift_gap(cache, p, t.e_pm3)) -
                                    t.p * t.p * (q2 * t.q + frac(7, 12) * t.b_pm3);
                     return single(lhs, rhs, 3);
                 }});

    r.push_back({"C-L22-B",
                 "sum_{p/4<k<p/2} 1/k == q_p(2) - p(1/2 q_p(2)^2 + (-1)^((p-1)/2)(E_{2p-4} - 2E_{p-3})) + "
                 "1/3 p^2 q_p(2)^3",
                 3, prime_above_three,
                 [](unsigned long p) { return need(-1, 2 * static_cast<long>(p) - 4); },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (unsigned long k = p / 4 + 1; 2 * k < p; ++k)
                         lhs += Rational(Integer(1), Integer(k));
                     Terms t(cache, p, false);
                     Rational q2 = t.q * t.q;
                     Rational rhs = t.q -
                                    t.p * (frac(1, 2) * q2 + t.leg * euler_shift_gap(cache, p, t.e_pm3)) +
                                    frac(1, 3) * t.p * t.p * q2 * t.q;
                     return single(lhs, rhs, 3);
                 }});

    r.push_back({"C-MORLEY", "C(p-1,(p-1)/2) == (-1)^((p-1)/2) 4^(p-1)", 3, prime_above_three,
                 [](unsigned long) { return SequenceDemand{}; },
                 [](SequenceCache&, unsigned long p) {
                     Rational lhs(binomial(static_cast<long>(p) - 1, half(p)));
                     Rational rhs = Rational(legendre_minus_one(p)) * power(4, p - 1);
                     return single(lhs, rhs, 3);
                 }});

    r.push_back({"C-2-5",
                 "sum_{k=0}^{(p-3)/2} C((p-1)/2,k) C(2k,k)/((2k+1)(-4)^k) == -2q_p(2) + p q_p(2)^2 + "
                 "(-1)^((p-1)/2) p E_{p-3}",
                 2, prime_above_three,
                 [](unsigned long p) { return need(-1, static_cast<long>(p) - 3); },
                 [](SequenceCache& cache, unsigned long p) {
                     const long n = half(p);
                     Rational lhs;
                     for (long k = 0; k <= n - 1; ++k)
                         lhs += Rational(binomial(n, k) * binomial(2 * k, k)) /
                                (Rational(2 * k + 1) * power(-4, static_cast<unsigned long>(k)));
                     Terms t(cache, p, false);
                     Rational rhs = Rational(-2) * t.q + t.p * t.q * t.q + t.leg * t.p * t.e_pm3;
                     return single(lhs, rhs, 2);
                 }});

    r.push_back({"C-EULER-SHIFT", "E_{2p-4} == E_{p-3}", 1, prime_above_three,
                 [](unsigned long p) { return need(-1, 2 * static_cast<long>(p) - 4); },
                 [](SequenceCache& cache, unsigned long p) {
                     return single(Rational(cache.euler(2 * p - 4)), Rational(cache.euler(p - 3)), 1);
                 }});

    r.push_back({"C-BINOM-P1", "for 0<=j<=(p-3)/2: C(p-1,2j) == 1 - p H_{2j}  (mod p^2)", 2,
                 prime_above_three,
                 [](unsigned long p) { return need(-1, -1, static_cast<long>(p) - 3); },
                 [](SequenceCache& cache, unsigned long p) {
                     Instances out;
                     for (long j = 0; j <= half(p) - 1; ++j) {
                         Rational rhs = Rational(1) - Rational(Integer(p)) *
                                                          cache.harmonic(static_cast<unsigned long>(2 * j));
                         out.push_back({j, Rational(binomial(static_cast<long>(p) - 1, 2 * j)), rhs, 2});
                     }
                     return out;
                 }});

    r.push_back({"C-TAIL",
                 "for (p-1)/2<k<p: C(2k,k)^2 == 0 (mod p^2) and "
                 "sum_{n=0}^{p-1-k} C(n-k-1,n)/2^n == 2^(p-1-k) (mod p)",
                 2, odd_prime, [](unsigned long) { return SequenceDemand{}; },
                 [](SequenceCache&, unsigned long p) {
                     const long lp = static_cast<long>(p);
                     Instances out;
                     for (long k = half(p) + 1; k <= lp - 1; ++k) {
                         Integer c = binomial(2 * k, k);
                         out.push_back({k, Rational(c * c), Rational(0), 2});
                         // C(k,n)(-1/2)^n written with the negative upper index.
                         Rational sum;
                         for (long n = 0; n <= lp - 1 - k; ++n)
                             sum += Rational(binomial(n - k - 1, n)) / power(2, static_cast<unsigned long>(n));
                         out.push_back({k, sum, power(2, static_cast<unsigned long>(lp - 1 - k)), 1});
                     }
                     return out;
                 }});

    r.push_back({"C-16-FULL", "sum_{k=0}^{p-1} C(2k,k)^2/16^k == (-1/p) - p^2 E_{p-3}", 3,
                 prime_above_three,
                 [](unsigned long p) { return need(-1, static_cast<long>(p) - 3); },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (long k = 0; k < static_cast<long>(p); ++k)
                         lhs += squared_central_over_16(k);
                     Terms t(cache, p, false);
                     return single(lhs, t.leg - t.p * t.p * t.e_pm3, 3);
                 }});

    r.push_back({"C-SU3-HK", "sum_{k=0}^{(p-1)/2} C(2k,k)^2 H_k/16^k == 2(-1/p) H_{(p-1)/2}", 2,
                 prime_above_three, [](unsigned long p) { return need(-1, -1, half(p)); },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (long k = 0; k <= half(p); ++k)
                         lhs += squared_central_over_16(k) * cache.harmonic(static_cast<unsigned long>(k));
                     Rational rhs = Rational(2 * legendre_minus_one(p)) *
                                    cache.harmonic(static_cast<unsigned long>(half(p)));
                     return single(lhs, rhs, 2);
                 }});

    r.push_back({"C-SU3-H2K",
                 "sum_{k=0}^{(p-1)/2} C(2k,k)^2 H_{2k}/16^k == (3/2)(-1/p) H_{(p-1)/2} + p E_{p-3}", 2,
                 prime_above_three,
                 [](unsigned long p) {
                     return need(-1, static_cast<long>(p) - 3, static_cast<long>(p) - 1);
                 },
                 [](SequenceCache& cache, unsigned long p) {
                     Rational lhs;
                     for (long k = 0; k <= half(p); ++k)
                         lhs += squared_central_over_16(k) *
                                cache.harmonic(static_cast<unsigned long>(2 * k));
                     Terms t(cache, p, false);
                     Rational rhs = frac(3, 2) * t.leg * cache.harmonic(static_cast<unsigned long>(half(p))) +
                                    t.p * t.e_pm3;
                     return single(lhs, rhs, 2);
                 }});

    return r;
}

} // namespace

const std::vector<CongruenceCheck>& congruence_registry() {
    static const std::vector<CongruenceCheck> registry = build_registry();
    return registry;
}

const CongruenceCheck* find_check(std::string_view id) {
    for (const auto& c : congruence_registry())
        if (c.id == id)
            return &c;
    return nullptr;
}

std::vector<const CongruenceCheck*> select_checks(std::span<const std::string> ids) {
    const auto& reg = congruence_registry();
    std::vector<bool> chosen(reg.size(), false);
    for (const auto& id : ids) {
        const CongruenceCheck* c = find_check(id);
        if (!c)
            throw Error(Errc::UnknownCheck, "unknown check id '" + id + "'");
        chosen[static_cast<std::size_t>(c - reg.data())] = true;
    }
    std::vector<const CongruenceCheck*> out;
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (chosen[i])
            out.push_back(&reg[i]);
    return out;
}

} // namespace clfcong
