// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "clfcong/clfcong.h"
#include "clfcong/congruences.hpp"
#include "clfcong/identities.hpp"
#include "clfcong/sequences.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace clfcong;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Integer power(unsigned long p, unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<const CongruenceCheck*> all_checks() {
    std::vector<const CongruenceCheck*> out;
    for (const auto& c : congruence_registry())
        out.push_back(&c);
    return out;
}

Outcome full_sweep(SequenceCache& cache) {
    Outcome o;
    auto checks = all_checks();
    auto primes = primes_up_to(500);
    auto rows = verify_range(checks, primes, cache, default_workers());
    std::size_t failed = 0;
    for (const auto& r : rows)
        if (!r.pass) {
            if (failed++ == 0)
                o.detail += "first failure " + r.check + "@" + std::to_string(r.p) + "; ";
        }
    o.pass = failed == 0 && !rows.empty();

    auto a = verify(*find_check("C-1-4"), 5, cache);
    bool anchor_a = a.pass && a.lhs_residue == 2 && a.rhs_residue == 2;
    auto b = verify(*find_check("C-1-5"), 3, cache);
    bool anchor_b = b.pass && b.lhs_residue == 10 && b.rhs_residue == 10;
    bool chain = true;
    for (unsigned long p : primes)
        if (p > 3 && !derivation_chain_holds(cache, p))
            chain = false;
    o.pass = o.pass && anchor_a && anchor_b && chain;
    std::ostringstream s;
    s << rows.size() << " rows, " << failed << " failed; C-1-4@5 " << a.lhs_residue << "/" << a.rhs_residue
      << "; C-1-5@3 " << b.lhs_residue << "/" << b.rhs_residue << " mod 27; derivation chain "
      << (chain ? "ok" : "broken");
    o.detail += s.str();
    return o;
}

Outcome identity_sweep(SequenceCache& cache) {
    Outcome o;
    auto summaries = run_identities(cache, {300, default_workers()});
    std::size_t cases = 0;
    for (const auto& s : summaries) {
        cases += s.cases;
        if (!s.passed()) {
            o.pass = false;
            o.detail += s.id + " fails at " + s.first_failure->parameter + "; ";
        }
    }
    o.pass = o.pass && summaries.size() == 5;
    o.detail += std::to_string(summaries.size()) + " identities, " + std::to_string(cases) + " cases, n <= 300";
    return o;
}

Outcome sequence_agreement() {
    Outcome o;
    const std::vector<Integer> first{1, 8, 80, 896, 10816};
    std::vector<Integer> p(301);
    for (unsigned long n = 0; n <= 300; ++n) {
        p[n] = clf_definitional(n);
        Integer s = zagier_s(n);
        Integer scaled = s << n;
        bool ok = clf_even_form(n) == p[n] && scaled == p[n] && s_sun_form_a(n) == s && s_sun_form_b(n) == s;
        if (n >= 2)
            ok = ok && clf_next_by_recurrence(n - 1, p[n - 1], p[n - 2]) == p[n];
        if (n < first.size())
            ok = ok && p[n] == first[n];
        if (!ok && o.pass) {
            o.pass = false;
            o.detail = "disagreement at n=" + std::to_string(n) + "; ";
        }
    }
    o.detail += "six forms agree for n <= 300; P_0..P_4 = 1, 8, 80, 896, 10816";
    return o;
}

Outcome morley_extended(SequenceCache& cache) {
    Outcome o;
    std::vector<const CongruenceCheck*> morley{find_check("C-MORLEY")};
    auto primes = primes_up_to(2000);
    auto rows = verify_range(morley, primes, cache, default_workers());
    std::string excess;
    for (const auto& r : rows) {
        if (!r.pass || r.valuation < 3)
            o.pass = false;
        if (r.valuation > 3)
            excess += (excess.empty() ? "" : ",") + std::to_string(r.p) + (r.valuation_capped ? "(>=" : "(") +
                      std::to_string(r.valuation) + ")";
    }
    o.pass = o.pass && rows.size() == primes.size() - 2;
    o.detail = std::to_string(rows.size()) + " primes in (3, 2000], valuation >= 3 everywhere; exceeds 3 at: " +
               (excess.empty() ? "none" : excess);
    return o;
}

unsigned long smallest_applicable(const CongruenceCheck& c) {
    for (unsigned long p : primes_up_to(100))
        if (c.applicable(p))
            return p;
    return 0;
}

Outcome mutation_sensitivity(SequenceCache& cache) {
    Outcome o;
    std::size_t probed = 0;
    for (const auto& c : congruence_registry()) {
        unsigned long p = smallest_applicable(c);
        if (p == 0) {
            o.pass = false;
            o.detail += c.id + " applies nowhere; ";
            continue;
        }
        // A family mixing exponents must also fail when only its lowest-exponent part is perturbed.
        std::vector<unsigned> exponents{c.exponent};
        for (const auto& inst : c.evaluate(cache, p))
            if (inst.exponent < c.exponent && exponents.size() == 1)
                exponents.push_back(inst.exponent);
        for (unsigned e : exponents)
            if (verify(c, p, cache, {power(p, e - 1)}).pass) {
                o.pass = false;
                o.detail += c.id + " survives +p^" + std::to_string(e - 1) + "; ";
            }
        if (!verify(c, p, cache, {power(p, c.exponent)}).pass) {
            o.pass = false;
            o.detail += c.id + " rejects +p^e; ";
        }
        ++probed;
    }
    o.detail += std::to_string(probed) + " checks: +p^(e-1) fails, +p^e passes at the smallest applicable prime";
    return o;
}

Outcome typo_regressions(SequenceCache& cache) {
    Outcome o;
    bool rejected = false;
    std::string printed;
    try {
        Integer v = clf_next_by_recurrence(1, 8, 1, RecurrenceForm::AsPrinted);
        rejected = v != 80;
        printed = "printed form gives P_2 = " + v.get_str();
    } catch (const Error& e) {
        rejected = e.code() == Errc::NonDivisible;
        printed = "printed form rejected as non-divisible";
    }
    Integer corrected = clf_next_by_recurrence(1, 8, 1);
    auto r = verify(*find_check("C-L22-B"), 5, cache);
    o.pass = rejected && corrected == 80 && r.pass && r.lhs_residue == 63 && r.rhs_residue == 63;
    o.detail = printed + ", corrected form gives " + corrected.get_str() + "; C-L22-B@5 " + r.lhs_residue.get_str() +
               "/" + r.rhs_residue.get_str() + " mod 125";
    return o;
}

std::string c_api_json(clf_context* ctx, const std::vector<unsigned long>& primes, unsigned workers) {
    std::vector<const char*> ids;
    for (size_t i = 0; i < clf_check_count(); ++i)
        ids.push_back(clf_check_id(i));
    clf_report* report = nullptr;
    if (clf_verify(ctx, ids.data(), ids.size(), primes.data(), primes.size(), workers, &report) != CLF_OK)
        return {};
    char* text = nullptr;
    std::string out;
    if (clf_report_format(report, CLF_FORMAT_JSON, &text) == CLF_OK) {
        out = text;
        clf_string_free(text);
    }
    clf_report_destroy(report);
    return out;
}

Outcome determinism() {
    Outcome o;
    auto primes = primes_up_to(200);
    clf_context* a = nullptr;
    clf_context* b = nullptr;
    if (clf_context_create(&a) != CLF_OK || clf_context_create(&b) != CLF_OK) {
        o.pass = false;
        o.detail = "context creation failed";
        return o;
    }
    std::string one = c_api_json(a, primes, 1);
    std::string many = c_api_json(b, primes, 4);
    clf_context_destroy(a);
    clf_context_destroy(b);
    o.pass = one.size() > 1000 && one == many;
    o.detail = "JSON report for all checks, p <= 200: " + std::to_string(one.size()) + " bytes with 1 worker, " +
               (one == many ? "identical" : "different") + " with 4";
    return o;
}

} // namespace

int main() {
    SequenceCache cache;
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 congruence sweep", [&] { return full_sweep(cache); }},
        {"2 identity sweep", [&] { return identity_sweep(cache); }},
        {"3 sequence cross-validation", [] { return sequence_agreement(); }},
        {"4 Morley to 2000", [&] { return morley_extended(cache); }},
        {"5 mutation sensitivity", [&] { return mutation_sensitivity(cache); }},
        {"6 typo regressions", [&] { return typo_regressions(cache); }},
        {"7 determinism", [] { return determinism(); }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-28s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
