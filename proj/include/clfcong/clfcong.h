/*
 * C interface to the clfcong verification library.
 *
 * Every object is an opaque handle created and destroyed through this API.
 * Functions that can fail return a clf_status; on failure a human-readable
 * message is available from clf_last_error() on the calling thread. Strings
 * returned through `char** out` are heap-allocated and must be released with
 * clf_string_free(). Strings inside a clf_report_row are owned by the report.
 */
#ifndef CLFCONG_H
#define CLFCONG_H

#include <stddef.h>

#if defined(CLFCONG_BUILDING_LIBRARY)
#define CLFCONG_API __attribute__((visibility("default")))
#else
#define CLFCONG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clf_status {
    CLF_OK = 0,
    CLF_ERR_INVALID_ARGUMENT = 1,
    CLF_ERR_NOT_PRIME = 2,
    CLF_ERR_NOT_INVERTIBLE = 3,
    CLF_ERR_DENOMINATOR_DIVISIBLE_BY_P = 4,
    CLF_ERR_DIVISION_BY_ZERO = 5,
    CLF_ERR_NON_INTEGER = 6,
    CLF_ERR_NON_DIVISIBLE = 7,
    CLF_ERR_NOT_APPLICABLE = 8,
    CLF_ERR_MODULUS_MISMATCH = 9,
    CLF_ERR_UNKNOWN_CHECK = 10,
    CLF_ERR_CACHE_INVALID = 11,
    CLF_ERR_IO = 12,
    CLF_ERR_INTERNAL = 99
} clf_status;

typedef enum clf_format {
    CLF_FORMAT_TEXT = 0,
    CLF_FORMAT_JSON = 1,
    CLF_FORMAT_CSV = 2
} clf_format;

/* Owns the memoized sequence tables. Safe to share between threads. */
typedef struct clf_context clf_context;
/* Result of a congruence sweep; rows are in canonical (check, p) order. */
typedef struct clf_report clf_report;
/* Result of an identity sweep. */
typedef struct clf_identity_report clf_identity_report;

typedef struct clf_report_row {
    const char* check;
    unsigned long p;
    unsigned exponent;
    const char* lhs;             /* residue of the left side mod p^exponent */
    const char* rhs;
    unsigned long valuation;     /* p-adic valuation of lhs - rhs, capped */
    int valuation_capped;        /* 1 when valuation hit exponent + 3 */
    int pass;
    long witness_index;          /* instance shown, for per-k families */
    size_t instances;
    const char* error;           /* NULL unless evaluation failed */
    double elapsed_seconds;
} clf_report_row;

CLFCONG_API const char* clf_version(void);
CLFCONG_API const char* clf_status_name(clf_status status);
CLFCONG_API const char* clf_last_error(void);
CLFCONG_API void clf_string_free(char* s);

CLFCONG_API clf_status clf_format_parse(const char* name, clf_format* out);

CLFCONG_API clf_status clf_context_create(clf_context** out);
CLFCONG_API void clf_context_destroy(clf_context* ctx);
/* Merges B_n/E_n tables from a JSON cache file after validating them. */
CLFCONG_API clf_status clf_context_load_cache(clf_context* ctx, const char* path);
/* Extends the tables to the given indices and writes them out. */
CLFCONG_API clf_status clf_context_save_cache(clf_context* ctx, const char* path,
                                              unsigned long bernoulli_upto, unsigned long euler_upto);

/* Registered checks, in canonical order. Out-of-range indices give NULL/0. */
CLFCONG_API size_t clf_check_count(void);
CLFCONG_API const char* clf_check_id(size_t index);
CLFCONG_API const char* clf_check_description(size_t index);
CLFCONG_API unsigned clf_check_exponent(size_t index);

/* Verifies every applicable (check, prime) pair. All ids and primes are
 * validated before any evaluation starts. */
CLFCONG_API clf_status clf_verify(clf_context* ctx, const char* const* check_ids, size_t n_ids,
                                  const unsigned long* primes, size_t n_primes, unsigned workers,
                                  clf_report** out);
CLFCONG_API size_t clf_report_size(const clf_report* report);
CLFCONG_API size_t clf_report_failures(const clf_report* report);
CLFCONG_API clf_status clf_report_row_at(const clf_report* report, size_t index, clf_report_row* out);
CLFCONG_API clf_status clf_report_format(const clf_report* report, clf_format format, char** out);
CLFCONG_API void clf_report_destroy(clf_report* report);

CLFCONG_API clf_status clf_identities(clf_context* ctx, unsigned long bound, unsigned workers,
                                      clf_identity_report** out);
CLFCONG_API size_t clf_identity_report_size(const clf_identity_report* report);
CLFCONG_API size_t clf_identity_report_failures(const clf_identity_report* report);
CLFCONG_API clf_status clf_identity_report_format(const clf_identity_report* report, clf_format format,
                                                  char** out);
CLFCONG_API void clf_identity_report_destroy(clf_identity_report* report);

/* name: 'P' (Catalan-Larcombe-French), 'S' (P_n / 2^n), 'B' (Bernoulli),
 * 'E' (Euler), 'H' (harmonic). Rationals are written "num/den". */
CLFCONG_API clf_status clf_sequence_value(clf_context* ctx, char name, unsigned long n, char** out);

/* All primes <= bound, ascending. Release the array with clf_primes_free(). */
CLFCONG_API clf_status clf_primes_up_to(unsigned long bound, unsigned long** out, size_t* count);
CLFCONG_API void clf_primes_free(unsigned long* primes);

/* Canonical residue of a decimal rational ("a" or "a/b") modulo p^e. */
CLFCONG_API clf_status clf_reduce(const char* rational, unsigned long p, unsigned e, char** out);
/* p-adic valuation of a decimal integer; -1 stands for zero's infinite one. */
CLFCONG_API clf_status clf_padic_valuation(const char* n, unsigned long p, long* out);

#ifdef __cplusplus
}
#endif

#endif /* CLFCONG_H */
