#include "clfcong/clfcong.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "clfcong/congruences.hpp"
#include "clfcong/identities.hpp"
#include "clfcong/report_format.hpp"
#include "clfcong/sequences.hpp"

struct clf_context {
    clfcong::SequenceCache cache;
};

struct clf_report {
    std::vector<clfcong::VerificationReport> rows;
    // Decimal strings backing clf_report_row pointers.
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
};

struct clf_identity_report {
    std::vector<clfcong::IdentitySummary> summaries;
};

namespace {

thread_local std::string last_error;

clf_status fail(clf_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

clf_status from_errc(clfcong::Errc code) {
    // Errc values and clf_status codes are kept numerically aligned.
    return static_cast<clf_status>(static_cast<int>(code));
}

// Runs body, mapping exceptions to status codes.
template <typename Body>
clf_status guarded(Body&& body) noexcept {
    try {
        last_error.clear();
        return body();
    } catch (const clfcong::Error& e) {
        return fail(from_errc(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(CLF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CLF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CLF_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

clfcong::ReportFormat to_format(clf_format f) {
    switch (f) {
    case CLF_FORMAT_TEXT: return clfcong::ReportFormat::Text;
    case CLF_FORMAT_JSON: return clfcong::ReportFormat::Json;
    case CLF_FORMAT_CSV: return clfcong::ReportFormat::Csv;
    }
    throw clfcong::Error(clfcong::Errc::InvalidArgument, "unknown clf_format value");
}

#define CLF_REQUIRE(cond, what)                                   \
    do {                                                          \
        if (!(cond))                                              \
            return fail(CLF_ERR_INVALID_ARGUMENT, what);          \
    } while (0)

} // namespace

extern "C" {

const char* clf_version(void) { return "0.1.0"; }

const char* clf_status_name(clf_status status) {
    if (status == CLF_OK)
        return "OK";
    if (status == CLF_ERR_INTERNAL)
        return "Internal";
    return clfcong::errc_name(static_cast<clfcong::Errc>(status));
}

const char* clf_last_error(void) { return last_error.c_str(); }

void clf_string_free(char* s) { std::free(s); }

clf_status clf_format_parse(const char* name, clf_format* out) {
    CLF_REQUIRE(name && out, "null argument");
    return guarded([&] {
        switch (clfcong::parse_report_format(name)) {
        case clfcong::ReportFormat::Text: *out = CLF_FORMAT_TEXT; break;
        case clfcong::ReportFormat::Json: *out = CLF_FORMAT_JSON; break;
        case clfcong::ReportFormat::Csv: *out = CLF_FORMAT_CSV; break;
        }
        return CLF_OK;
    });
}

clf_status clf_context_create(clf_context** out) {
    CLF_REQUIRE(out, "null output handle");
    return guarded([&] {
        *out = new clf_context();
        return CLF_OK;
    });
}

void clf_context_destroy(clf_context* ctx) { delete ctx; }

clf_status clf_context_load_cache(clf_context* ctx, const char* path) {
    CLF_REQUIRE(ctx && path, "null argument");
    return guarded([&] {
        ctx->cache.load(path);
        return CLF_OK;
    });
}

clf_status clf_context_save_cache(clf_context* ctx, const char* path, unsigned long bernoulli_upto,
                                  unsigned long euler_upto) {
    CLF_REQUIRE(ctx && path, "null argument");
    return guarded([&] {
        clfcong::SequenceDemand d;
        d.bernoulli = static_cast<long>(bernoulli_upto);
        d.euler = static_cast<long>(euler_upto);
        ctx->cache.prewarm(d);
        ctx->cache.save(path);
        return CLF_OK;
    });
}

size_t clf_check_count(void) { return clfcong::congruence_registry().size(); }

const char* clf_check_id(size_t index) {
    const auto& reg = clfcong::congruence_registry();
    return index < reg.size() ? reg[index].id.c_str() : nullptr;
}

const char* clf_check_description(size_t index) {
    const auto& reg = clfcong::congruence_registry();
    return index < reg.size() ? reg[index].description.c_str() : nullptr;
}

unsigned clf_check_exponent(size_t index) {
    const auto& reg = clfcong::congruence_registry();
    return index < reg.size() ? reg[index].exponent : 0;
}

clf_status clf_verify(clf_context* ctx, const char* const* check_ids, size_t n_ids, const unsigned long* primes,
                      size_t n_primes, unsigned workers, clf_report** out) {
    CLF_REQUIRE(ctx && out, "null argument");
    CLF_REQUIRE(check_ids || n_ids == 0, "null check id list");
    CLF_REQUIRE(primes || n_primes == 0, "null prime list");
    return guarded([&] {
        std::vector<std::string> ids;
        for (size_t i = 0; i < n_ids; ++i) {
            if (!check_ids[i])
                return fail(CLF_ERR_INVALID_ARGUMENT, "null check id");
            ids.emplace_back(check_ids[i]);
        }
        auto checks = clfcong::select_checks(ids);
        for (size_t i = 0; i < n_primes; ++i)
            if (!clfcong::is_prime(clfcong::Integer(primes[i])))
                return fail(CLF_ERR_NOT_PRIME, std::to_string(primes[i]) + " is not prime");

        auto report = std::make_unique<clf_report>();
        report->rows = clfcong::verify_range(checks, std::span(primes, n_primes), ctx->cache, workers);
        for (const auto& r : report->rows) {
            report->lhs.push_back(r.error ? "" : clfcong::to_string(r.lhs_residue));
            report->rhs.push_back(r.error ? "" : clfcong::to_string(r.rhs_residue));
        }
        *out = report.release();
        return CLF_OK;
    });
}

size_t clf_report_size(const clf_report* report) { return report ? report->rows.size() : 0; }

size_t clf_report_failures(const clf_report* report) {
    if (!report)
        return 0;
    size_t n = 0;
    for (const auto& r : report->rows)
        n += r.pass ? 0 : 1;
    return n;
}

clf_status clf_report_row_at(const clf_report* report, size_t index, clf_report_row* out) {
    CLF_REQUIRE(report && out, "null argument");
    if (index >= report->rows.size())
        return fail(CLF_ERR_INVALID_ARGUMENT, "row index out of range");
    const auto& r = report->rows[index];
    out->check = r.check.c_str();
    out->p = r.p;
    out->exponent = r.exponent;
    out->lhs = report->lhs[index].c_str();
    out->rhs = report->rhs[index].c_str();
    out->valuation = r.valuation;
    out->valuation_capped = r.valuation_capped ? 1 : 0;
    out->pass = r.pass ? 1 : 0;
    out->witness_index = r.witness_index;
    out->instances = r.instances;
    out->error = r.error ? r.error->c_str() : nullptr;
    out->elapsed_seconds = std::chrono::duration<double>(r.elapsed).count();
    return CLF_OK;
}

clf_status clf_report_format(const clf_report* report, clf_format format, char** out) {
    CLF_REQUIRE(report && out, "null argument");
    return guarded([&] {
        *out = dup_string(clfcong::format_reports(report->rows, to_format(format)));
        return CLF_OK;
    });
}

void clf_report_destroy(clf_report* report) { delete report; }

clf_status clf_identities(clf_context* ctx, unsigned long bound, unsigned workers, clf_identity_report** out) {
    CLF_REQUIRE(ctx && out, "null argument");
    CLF_REQUIRE(bound >= 1, "identity bound must be >= 1");
    return guarded([&] {
        auto report = std::make_unique<clf_identity_report>();
        report->summaries = clfcong::run_identities(ctx->cache, {bound, workers});
        *out = report.release();
        return CLF_OK;
    });
}

size_t clf_identity_report_size(const clf_identity_report* report) {
    return report ? report->summaries.size() : 0;
}

size_t clf_identity_report_failures(const clf_identity_report* report) {
    if (!report)
        return 0;
    size_t n = 0;
    for (const auto& s : report->summaries)
        n += s.passed() ? 0 : 1;
    return n;
}

clf_status clf_identity_report_format(const clf_identity_report* report, clf_format format, char** out) {
    CLF_REQUIRE(report && out, "null argument");
    return guarded([&] {
        *out = dup_string(clfcong::format_identities(report->summaries, to_format(format)));
        return CLF_OK;
    });
}

void clf_identity_report_destroy(clf_identity_report* report) { delete report; }

clf_status clf_sequence_value(clf_context* ctx, char name, unsigned long n, char** out) {
    CLF_REQUIRE(ctx && out, "null argument");
    return guarded([&] {
        std::string value;
        switch (name) {
        case 'P': value = clfcong::to_string(ctx->cache.clf(n)); break;
        case 'S': value = clfcong::to_string(clfcong::zagier_s(n)); break;
        case 'B': value = ctx->cache.bernoulli(n).str(); break;
        case 'E': value = clfcong::to_string(ctx->cache.euler(n)); break;
        case 'H': value = ctx->cache.harmonic(n).str(); break;
        default:
            return fail(CLF_ERR_INVALID_ARGUMENT, std::string("unknown sequence '") + name + "'");
        }
        *out = dup_string(value);
        return CLF_OK;
    });
}

clf_status clf_primes_up_to(unsigned long bound, unsigned long** out, size_t* count) {
    CLF_REQUIRE(out && count, "null argument");
    return guarded([&] {
        auto primes = clfcong::primes_up_to(bound);
        *count = primes.size();
        *out = static_cast<unsigned long*>(std::malloc(std::max<size_t>(1, primes.size()) * sizeof(unsigned long)));
        if (!*out)
            throw std::bad_alloc();
        std::copy(primes.begin(), primes.end(), *out);
        return CLF_OK;
    });
}

void clf_primes_free(unsigned long* primes) { std::free(primes); }

clf_status clf_reduce(const char* rational, unsigned long p, unsigned e, char** out) {
    CLF_REQUIRE(rational && out, "null argument");
    return guarded([&] {
        clfcong::PrimePowerModulus m(clfcong::Integer(p), e);
        *out = dup_string(clfcong::to_string(clfcong::reduce(clfcong::Rational::parse(rational), m).value()));
        return CLF_OK;
    });
}

clf_status clf_padic_valuation(const char* n, unsigned long p, long* out) {
    CLF_REQUIRE(n && out, "null argument");
    return guarded([&] {
        auto v = clfcong::padic_valuation(clfcong::parse_integer(n), clfcong::Integer(p));
        *out = v.infinite ? -1 : static_cast<long>(v.value);
        return CLF_OK;
    });
}

} // extern "C"
