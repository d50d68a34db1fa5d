#pragma once

// Registry of supercongruences and the harness that verifies them exactly:
// both sides are evaluated in Q, reduced modulo p^e, and the p-adic valuation
// of their difference is reported.

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clfcong/sequences.hpp"

namespace clfcong {

/// One congruence lhs == rhs (mod p^exponent). Families such as "for every
/// k <= (p-1)/2" yield one instance per k.
struct CongruenceInstance {
    long index = 0;
    Rational lhs;
    Rational rhs;
    unsigned exponent = 1;
};

struct CongruenceCheck {
    std::string id;
    std::string description;
    // Largest exponent over the check's instances.
    unsigned exponent = 1;
    std::function<bool(unsigned long p)> applicable;
    std::function<SequenceDemand(unsigned long p)> demand;
    std::function<std::vector<CongruenceInstance>(SequenceCache&, unsigned long p)> evaluate;
};

// All registered checks, in canonical report order.
const std::vector<CongruenceCheck>& congruence_registry();

// nullptr when the id is unknown.
const CongruenceCheck* find_check(std::string_view id);

// Throws UnknownCheck for the first unknown id. The result follows registry
// order whatever the order of `ids`, and drops duplicates.
std::vector<const CongruenceCheck*> select_checks(std::span<const std::string> ids);

struct VerificationReport {
    std::string check;
    unsigned long p = 0;
    // Values below describe the witness instance: the one whose valuation
    // falls furthest below (or least above) its exponent.
    unsigned exponent = 0;
    Integer lhs_residue;
    Integer rhs_residue;
    // min(v_p(lhs - rhs), exponent + 3)
    unsigned long valuation = 0;
    bool valuation_capped = false;
    bool pass = false;
    long witness_index = 0;
    std::size_t instances = 0;
    std::optional<std::string> error;
    std::chrono::nanoseconds elapsed{0};
};

constexpr unsigned long kValuationHeadroom = 3;

struct VerifyOptions {
    // Added to every right-hand side; used to confirm a check can fail.
    Integer rhs_shift = 0;
};

// Throws NotApplicable when the check does not cover p, and
// DenominatorDivisibleByP when a side cannot be read modulo p^e.
VerificationReport verify(const CongruenceCheck& check, unsigned long p, SequenceCache& cache,
                          const VerifyOptions& options = {});

// Every applicable (check, prime) pair, ordered by (registry position, p).
// Per-pair errors become failing rows carrying the error text.
std::vector<VerificationReport> verify_range(std::span<const CongruenceCheck* const> checks,
                                             std::span<const unsigned long> primes,
                                             SequenceCache& cache, unsigned workers = 1);

// Restates how the H_{2k}-weighted sum is derived from the H_k-weighted sum,
// the plain sum and the C((p-1)/2,k)-weighted sum: p * S(H_2k) against
// p/2 * S(H_k) + S(1) - S(C(n,k)) modulo p^2. True iff both residues match.
bool derivation_chain_holds(SequenceCache& cache, unsigned long p);

} // namespace clfcong
