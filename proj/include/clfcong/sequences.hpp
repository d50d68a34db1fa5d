#pragma once

// Exact values of the sequences the checks are built from. Every sequence is
// computed from its defining formula; alternative closed forms are kept next
// to it so they can be cross-validated.

#include <filesystem>
#include <shared_mutex>
#include <vector>

#include "clfcong/exact_arith.hpp"

namespace clfcong {

// C(n, k) for any integer n. Negative n uses C(n, k) = (-1)^k C(k - n - 1, k);
// k < 0 gives 0.
Integer binomial(long n, long k);

/// How far each memo table must reach.
struct SequenceDemand {
    long bernoulli = -1;
    long euler = -1;
    long harmonic = -1;
    long odd_harmonic = -1;
    long clf = -1;

    void merge(const SequenceDemand& other);
};

/// Append-only memo tables shared by all checks. Safe for concurrent use:
/// lookups take a shared lock, table growth an exclusive one, and an entry
/// never changes once written.
class SequenceCache {
public:
    SequenceCache();

    Integer factorial(unsigned long n);
    // B_1 = -1/2 convention, from sum_{k<n} C(n,k) B_k = 0.
    Rational bernoulli(unsigned long n);
    Integer euler(unsigned long n);
    // Catalan-Larcombe-French P_n via the definitional sum.
    Integer clf(unsigned long n);
    Rational harmonic(unsigned long n);
    // sum_{j=1}^{k} 1/(2j-1)
    Rational odd_harmonic(unsigned long k);

    void prewarm(const SequenceDemand& demand);

    std::size_t bernoulli_size() const;
    std::size_t euler_size() const;

    // Persisted B_n/E_n tables (JSON, values as decimal strings). Loading
    // spot-checks the recurrences and refuses the file on any mismatch.
    void load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    // Full recurrence check of the populated Bernoulli and Euler tables.
    bool tables_consistent() const;

private:
    void grow_factorial(unsigned long n);
    void grow_bernoulli(unsigned long n);
    void grow_euler(unsigned long n);
    void grow_clf(unsigned long n);
    void grow_harmonic(unsigned long n);
    void grow_odd_harmonic(unsigned long n);

    mutable std::shared_mutex mutex_;
    std::vector<Integer> factorial_;
    std::vector<Rational> bernoulli_;
    std::vector<Integer> euler_;
    std::vector<Integer> clf_;
    std::vector<Integer> clf_weight_;
    std::vector<Rational> harmonic_;
    std::vector<Rational> odd_harmonic_;
};

// Recurrence residual helpers shared by the cache and its file loader.
// bernoulli_recurrence_sum(B, n) = sum_{k<=n} C(n+1,k) B_k, zero when B is right.
Rational bernoulli_recurrence_sum(const std::vector<Rational>& table, std::size_t n);
// -sum_{k=1}^{n/2} C(n,2k) E_{n-2k}
Integer euler_recurrence_value(const std::vector<Integer>& table, std::size_t n);

// sum_k C(2k,k)^2 C(2(n-k),n-k)^2 / C(n,k), uncached. Evaluated as
// (1/n!) sum_k w_k w_{n-k} with w_k = C(2k,k)^2 k!; throws NonInteger if n!
// does not divide the sum.
Integer clf_definitional(unsigned long n);

// 2^n sum_{k<=n/2} C(n,2k) C(2k,k)^2 4^(n-2k)
Integer clf_even_form(unsigned long n);

enum class RecurrenceForm {
    Corrected,  // (n+1)^2 P_{n+1} = (24n(n+1)+8) P_n - 128 n^2 P_{n-1}
    AsPrinted,  // leading coefficient (n+1) instead of (n+1)^2
};

// P_{n+1} from P_n and P_{n-1}. Throws NonDivisible when the division by the
// leading coefficient is not exact.
Integer clf_next_by_recurrence(unsigned long n, const Integer& p_n, const Integer& p_prev,
                               RecurrenceForm form = RecurrenceForm::Corrected);

// S_n = sum C(2k,k)^2 C(n,2k) 4^(n-2k); asserts 2^n S_n = P_n.
Integer zagier_s(unsigned long n);
// S_n = sum C(2k,k)^2 C(k,n-k) (-4)^(n-k)
Integer s_sun_form_a(unsigned long n);
// S_n = (-2)^(-n) sum C(2k,k) C(2(n-k),n-k) C(k,n-k) (-4)^k
Integer s_sun_form_b(unsigned long n);

// (2^(p-1) - 1) / p for an odd prime p.
Integer fermat_quotient_two(unsigned long p);

// (-1/p) = (-1)^((p-1)/2).
int legendre_minus_one(unsigned long p);

std::vector<unsigned long> primes_up_to(unsigned long bound);

} // namespace clfcong
