#pragma once

// Exact (non-modular) binomial/harmonic identities, checked pointwise in Q.

#include <optional>
#include <string>
#include <vector>

#include "clfcong/sequences.hpp"

namespace clfcong {

struct IdentityOutcome {
    Rational lhs;
    Rational rhs;

    bool holds() const { return lhs == rhs; }
};

// sum_{k<n} C(n,k) C(n+k,k) (-1)^k H_k/(2k+1)
//   = -H_n C(2n,n) (-1)^n/(2n+1) + 2/(2n+1) sum_{k=1}^{n} (-1)^k/k,   n >= 1
IdentityOutcome harmonic_binomial_identity(SequenceCache& cache, unsigned long n);

// sum_{k<n} C(n,k) C(2k,k)/((2k+1)(-4)^k)
//   = -C(2n,n)/((2n+1)(-4)^n) + 4^n/((2n+1) C(2n,n)) sum_{k<=n} C(2k,k)^2/16^k,   n >= 1
IdentityOutcome central_binomial_quarter_identity(unsigned long n);

// sum_{k=0}^{n} C(n+k,k)/2^k = 2^n
IdentityOutcome binomial_half_power_identity(unsigned long n);

// sum_{k=m}^{N} C(k,m) = C(N+1,m+1),   0 <= m <= N
IdentityOutcome hockey_stick_identity(unsigned long upper, unsigned long m);

// H_{2k} = H_k/2 + sum_{j=1}^{k} 1/(2j-1)
IdentityOutcome harmonic_doubling_identity(SequenceCache& cache, unsigned long k);

struct IdentityCounterexample {
    std::string parameter;  // "n=7" or "N=9,m=3"
    Rational lhs;
    Rational rhs;
};

struct IdentitySummary {
    std::string id;
    std::string description;
    std::string domain;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<IdentityCounterexample> first_failure;

    bool passed() const { return failures == 0; }
};

struct IdentitySweepOptions {
    unsigned long bound = 1;
    unsigned workers = 1;
};

// Runs every identity over its whole parameter range up to the bound.
std::vector<IdentitySummary> run_identities(SequenceCache& cache, const IdentitySweepOptions& options);

} // namespace clfcong
