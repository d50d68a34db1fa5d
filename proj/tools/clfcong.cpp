// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <clfcong/clfcong.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContextDeleter {
    void operator()(clf_context* c) const { clf_context_destroy(c); }
};
struct ReportDeleter {
    void operator()(clf_report* r) const { clf_report_destroy(r); }
};
struct IdentityReportDeleter {
    void operator()(clf_identity_report* r) const { clf_identity_report_destroy(r); }
};
struct StringDeleter {
    void operator()(char* s) const { clf_string_free(s); }
};
using ContextPtr = std::unique_ptr<clf_context, ContextDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Status codes that mean the invocation itself was wrong.
bool is_usage_status(clf_status s) {
    return s == CLF_ERR_INVALID_ARGUMENT || s == CLF_ERR_UNKNOWN_CHECK || s == CLF_ERR_NOT_PRIME ||
           s == CLF_ERR_CACHE_INVALID || s == CLF_ERR_IO;
}

struct ApiError : std::runtime_error {
    clf_status status;
    ApiError(clf_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(clf_status s) {
    if (s != CLF_OK)
        throw ApiError(s, std::string(clf_status_name(s)) + ": " + clf_last_error());
}

ContextPtr make_context() {
    clf_context* ctx = nullptr;
    check(clf_context_create(&ctx));
    return ContextPtr(ctx);
}

std::string take(char* s) {
    OwnedString owned(s);
    return owned.get();
}

clf_format parse_format(const std::string& name) {
    clf_format f{};
    if (clf_format_parse(name.c_str(), &f) != CLF_OK)
        throw UsageError("unknown format '" + name + "' (expected text, json or csv)");
    return f;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, sep);)
        if (!item.empty())
            out.push_back(item);
    return out;
}

unsigned long parse_count(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        if (text.empty() || text.front() == '-')
            throw std::invalid_argument(text);
        v = std::stoul(text, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
    if (used != text.size())
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    return v;
}

// "<bound>" for every prime up to bound, or a comma list of primes.
std::vector<unsigned long> parse_primes(const std::string& arg) {
    if (arg.find(',') != std::string::npos) {
        std::vector<unsigned long> primes;
        for (const auto& item : split(arg, ','))
            primes.push_back(parse_count(item, "prime"));
        if (primes.empty())
            throw UsageError("empty prime list");
        return primes;
    }
    const unsigned long bound = parse_count(arg, "prime bound");
    if (bound < 3)
        throw UsageError("prime bound must be >= 3");
    unsigned long* raw = nullptr;
    std::size_t n = 0;
    check(clf_primes_up_to(bound, &raw, &n));
    std::vector<unsigned long> primes(raw, raw + n);
    clf_primes_free(raw);
    return primes;
}

std::vector<std::string> parse_checks(const std::string& arg) {
    if (arg == "all") {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < clf_check_count(); ++i)
            ids.emplace_back(clf_check_id(i));
        return ids;
    }
    auto ids = split(arg, ',');
    for (const auto& id : ids) {
        bool known = false;
        for (std::size_t i = 0; i < clf_check_count() && !known; ++i)
            known = (id == clf_check_id(i));
        if (!known)
            throw UsageError("unknown check id '" + id + "'");
    }
    return ids;
}

std::optional<std::string> cache_path(const std::string& flag) {
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("CLFCONG_CACHE"); env && *env)
        return std::string(env);
    return std::nullopt;
}

void load_cache(clf_context* ctx, const std::optional<std::string>& path) {
    if (path)
        check(clf_context_load_cache(ctx, path->c_str()));
}

struct VerifyArgs {
    std::string checks = "all";
    std::string primes = "50";
    std::string format = "text";
    std::string cache;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

int cmd_verify(const VerifyArgs& args) {
    const auto format = parse_format(args.format);
    const auto ids = parse_checks(args.checks);
    const auto primes = parse_primes(args.primes);
    if (args.workers == 0)
        throw UsageError("--workers must be >= 1");

    auto ctx = make_context();
    load_cache(ctx.get(), cache_path(args.cache));

    std::vector<const char*> id_ptrs;
    for (const auto& id : ids)
        id_ptrs.push_back(id.c_str());
    clf_report* raw = nullptr;
    check(clf_verify(ctx.get(), id_ptrs.data(), id_ptrs.size(), primes.data(), primes.size(), args.workers, &raw));
    std::unique_ptr<clf_report, ReportDeleter> report(raw);

    char* text = nullptr;
    check(clf_report_format(report.get(), format, &text));
    std::cout << take(text);
    return clf_report_failures(report.get()) == 0 ? kExitPass : kExitFail;
}

struct IdentityArgs {
    unsigned long bound = 100;
    std::string format = "text";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

int cmd_identities(const IdentityArgs& args) {
    const auto format = parse_format(args.format);
    if (args.bound < 1)
        throw UsageError("--identities must be >= 1");
    auto ctx = make_context();
    clf_identity_report* raw = nullptr;
    check(clf_identities(ctx.get(), args.bound, std::max(1u, args.workers), &raw));
    std::unique_ptr<clf_identity_report, IdentityReportDeleter> report(raw);
    char* text = nullptr;
    check(clf_identity_report_format(report.get(), format, &text));
    std::cout << take(text);
    return clf_identity_report_failures(report.get()) == 0 ? kExitPass : kExitFail;
}

struct SequenceArgs {
    std::string name;
    std::string range = "0..10";
    std::string cache;
};

int cmd_sequence(const SequenceArgs& args) {
    if (args.name.size() != 1 || std::string("PSBEH").find(args.name[0]) == std::string::npos)
        throw UsageError("unknown sequence '" + args.name + "' (expected one of P, S, B, E, H)");
    const auto dots = args.range.find("..");
    if (dots == std::string::npos)
        throw UsageError("range must look like FROM..TO");
    const unsigned long from = parse_count(args.range.substr(0, dots), "range start");
    const unsigned long to = parse_count(args.range.substr(dots + 2), "range end");
    if (from > to)
        throw UsageError("empty range " + args.range);

    auto ctx = make_context();
    const char name = args.name[0];
    if (name == 'B' || name == 'E')
        load_cache(ctx.get(), cache_path(args.cache));
    for (unsigned long n = from; n <= to; ++n) {
        char* value = nullptr;
        check(clf_sequence_value(ctx.get(), name, n, &value));
        std::cout << n << '\t' << take(value) << '\n';
    }
    return kExitPass;
}

int cmd_checks() {
    for (std::size_t i = 0; i < clf_check_count(); ++i)
        std::cout << clf_check_id(i) << "\tmod p^" << clf_check_exponent(i) << '\t'
                  << clf_check_description(i) << '\n';
    return kExitPass;
}

struct CacheArgs {
    std::string cache;
    unsigned long upto = 1000;
};

int cmd_cache_build(const CacheArgs& args) {
    auto path = cache_path(args.cache);
    if (!path)
        throw UsageError("no cache path (use --cache or CLFCONG_CACHE)");
    auto ctx = make_context();
    check(clf_context_save_cache(ctx.get(), path->c_str(), args.upto, args.upto));
    std::cout << "wrote B_0..B_" << args.upto << " and E_0..E_" << args.upto << " to " << *path << '\n';
    return kExitPass;
}

int cmd_cache_check(const CacheArgs& args) {
    auto path = cache_path(args.cache);
    if (!path)
        throw UsageError("no cache path (use --cache or CLFCONG_CACHE)");
    auto ctx = make_context();
    const clf_status s = clf_context_load_cache(ctx.get(), path->c_str());
    if (s != CLF_OK) {
        std::cerr << "cache rejected: " << clf_last_error() << '\n';
        return kExitFail;
    }
    std::cout << *path << ": ok\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Catalan-Larcombe-French supercongruences and related identities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(clf_version()));

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Verify registered congruences over a range of primes");
    verify_cmd->add_option("--checks", verify.checks, "Comma-separated check ids, or 'all'");
    verify_cmd->add_option("--primes", verify.primes, "Prime bound, or a comma-separated list of primes");
    verify_cmd->add_option("--format", verify.format, "text | json | csv");
    verify_cmd->add_option("--cache", verify.cache, "Bernoulli/Euler cache file (default: $CLFCONG_CACHE)");
    verify_cmd->add_option("--workers", verify.workers, "Worker threads");

    IdentityArgs ident;
    auto* ident_cmd = app.add_subcommand("identities", "Check the exact identities for every parameter up to a bound");
    ident_cmd->add_option("--identities,--bound", ident.bound, "Largest parameter value");
    ident_cmd->add_option("--format", ident.format, "text | json | csv");
    ident_cmd->add_option("--workers", ident.workers, "Worker threads");

    SequenceArgs seq;
    auto* seq_cmd = app.add_subcommand("sequence", "Print exact sequence values");
    seq_cmd->add_option("name", seq.name, "P, S, B, E or H")->required();
    seq_cmd->add_option("--range", seq.range, "FROM..TO (inclusive)");
    seq_cmd->add_option("--cache", seq.cache, "Bernoulli/Euler cache file (default: $CLFCONG_CACHE)");

    auto* checks_cmd = app.add_subcommand("checks", "List registered congruence checks");

    CacheArgs cache;
    auto* cache_cmd = app.add_subcommand("cache", "Manage the Bernoulli/Euler cache file");
    cache_cmd->require_subcommand(1);
    auto* build_cmd = cache_cmd->add_subcommand("build", "Compute tables and write the cache file");
    build_cmd->add_option("--cache", cache.cache, "Cache file (default: $CLFCONG_CACHE)");
    build_cmd->add_option("--upto", cache.upto, "Largest index stored");
    auto* check_cmd = cache_cmd->add_subcommand("check", "Validate an existing cache file");
    check_cmd->add_option("--cache", cache.cache, "Cache file (default: $CLFCONG_CACHE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify_cmd) return cmd_verify(verify);
        if (*ident_cmd) return cmd_identities(ident);
        if (*seq_cmd) return cmd_sequence(seq);
        if (*checks_cmd) return cmd_checks();
        if (*build_cmd) return cmd_cache_build(cache);
        if (*check_cmd) return cmd_cache_check(cache);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_usage_status(e.status) ? kExitUsage : kExitFail;
    }
    return kExitUsage;
}
