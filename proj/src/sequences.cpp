#include "clfcong/sequences.hpp"

#include <algorithm>
#include <mutex>

namespace clfcong {

Integer binomial(long n, long k) {
    if (k < 0)
        return 0;
    if (n < 0) {
        Integer r = binomial(k - n - 1, k);
        return (k % 2 == 0) ? r : Integer(-r);
    }
    if (k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

// w_k = C(2k,k)^2 k!, so that C(2k,k)^2 C(2(n-k),n-k)^2 / C(n,k) = w_k w_{n-k} / n!.
void extend_clf_weights(std::vector<Integer>& w, unsigned long n) {
    Integer fact = 1;
    for (unsigned long k = 1; k < w.size(); ++k)
        fact *= k;
    while (w.size() <= n) {
        const auto k = static_cast<unsigned long>(w.size());
        if (k > 0)
            fact *= k;
        Integer c = binomial(2 * static_cast<long>(k), static_cast<long>(k));
        w.push_back(c * c * fact);
    }
}

Integer clf_from_weights(const std::vector<Integer>& w, unsigned long n) {
    Integer sum = 0;
    for (unsigned long k = 0; 2 * k < n; ++k)
        sum += w[k] * w[n - k];
    sum *= 2;
    if (n % 2 == 0)
        sum += w[n / 2] * w[n / 2];
    Integer nfact;
    mpz_fac_ui(nfact.get_mpz_t(), n);
    if (!mpz_divisible_p(sum.get_mpz_t(), nfact.get_mpz_t()))
        throw Error(Errc::NonInteger, "definitional sum for P_" + std::to_string(n) + " is not an integer");
    mpz_divexact(sum.get_mpz_t(), sum.get_mpz_t(), nfact.get_mpz_t());
    return sum;
}

} // namespace

void SequenceDemand::merge(const SequenceDemand& other) {
    bernoulli = std::max(bernoulli, other.bernoulli);
    euler = std::max(euler, other.euler);
    harmonic = std::max(harmonic, other.harmonic);
    odd_harmonic = std::max(odd_harmonic, other.odd_harmonic);
    clf = std::max(clf, other.clf);
}

SequenceCache::SequenceCache() {
    factorial_.emplace_back(1);
    bernoulli_.emplace_back(1);
    euler_.emplace_back(1);
    clf_.emplace_back(1);
    harmonic_.emplace_back(0);
    odd_harmonic_.emplace_back(0);
}

// Lookup under a shared lock; on a miss, grow under an exclusive lock.
#define CLFCONG_MEMO_LOOKUP(table, grow, n)                  \
    {                                                        \
        std::shared_lock lock(mutex_);                       \
        if ((n) < table.size())                              \
            return table[(n)];                               \
    }                                                        \
    std::unique_lock lock(mutex_);                           \
    grow(n);                                                 \
    return table[(n)];

Integer SequenceCache::factorial(unsigned long n) { CLFCONG_MEMO_LOOKUP(factorial_, grow_factorial, n) }
Rational SequenceCache::bernoulli(unsigned long n) { CLFCONG_MEMO_LOOKUP(bernoulli_, grow_bernoulli, n) }
Integer SequenceCache::euler(unsigned long n) { CLFCONG_MEMO_LOOKUP(euler_, grow_euler, n) }
Integer SequenceCache::clf(unsigned long n) { CLFCONG_MEMO_LOOKUP(clf_, grow_clf, n) }
Rational SequenceCache::harmonic(unsigned long n) { CLFCONG_MEMO_LOOKUP(harmonic_, grow_harmonic, n) }
Rational SequenceCache::odd_harmonic(unsigned long k) {
    CLFCONG_MEMO_LOOKUP(odd_harmonic_, grow_odd_harmonic, k)
}

#undef CLFCONG_MEMO_LOOKUP

void SequenceCache::prewarm(const SequenceDemand& d) {
    std::unique_lock lock(mutex_);
    if (d.bernoulli >= 0) grow_bernoulli(static_cast<unsigned long>(d.bernoulli));
    if (d.euler >= 0) grow_euler(static_cast<unsigned long>(d.euler));
    if (d.harmonic >= 0) grow_harmonic(static_cast<unsigned long>(d.harmonic));
    if (d.odd_harmonic >= 0) grow_odd_harmonic(static_cast<unsigned long>(d.odd_harmonic));
    if (d.clf >= 0) grow_clf(static_cast<unsigned long>(d.clf));
}

std::size_t SequenceCache::bernoulli_size() const {
    std::shared_lock lock(mutex_);
    return bernoulli_.size();
}

std::size_t SequenceCache::euler_size() const {
    std::shared_lock lock(mutex_);
    return euler_.size();
}

void SequenceCache::grow_factorial(unsigned long n) {
    while (factorial_.size() <= n)
        factorial_.push_back(factorial_.back() * static_cast<unsigned long>(factorial_.size()));
}

Rational bernoulli_recurrence_sum(const std::vector<Rational>& table, std::size_t n) {
    // sum_{k=0}^{n} C(n+1, k) B_k with the binomial row built incrementally.
    Rational sum;
    Integer c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (!table[k].is_zero())
            sum += Rational(c) * table[k];
        c = c * static_cast<unsigned long>(n + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    return sum;
}

void SequenceCache::grow_bernoulli(unsigned long n) {
    while (bernoulli_.size() <= n) {
        const std::size_t m = bernoulli_.size();
        // C(m+1, m) B_m = -sum_{k<m} C(m+1, k) B_k
        Rational partial;
        Integer c = 1;
        for (std::size_t k = 0; k < m; ++k) {
            if (!bernoulli_[k].is_zero())
                partial += Rational(c) * bernoulli_[k];
            c = c * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
        }
        bernoulli_.push_back(-partial / Rational(static_cast<unsigned long>(m + 1)));
    }
}

Integer euler_recurrence_value(const std::vector<Integer>& table, std::size_t n) {
    Integer sum = 0;
    Integer c = 1;  // C(n, j)
    for (std::size_t j = 1; j <= n; ++j) {
        c = c * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j);
        if (j % 2 == 0)
            sum += c * table[n - j];
    }
    return -sum;
}

void SequenceCache::grow_euler(unsigned long n) {
    while (euler_.size() <= n)
        euler_.push_back(euler_recurrence_value(euler_, euler_.size()));
}

void SequenceCache::grow_clf(unsigned long n) {
    if (clf_.size() > n)
        return;
    extend_clf_weights(clf_weight_, n);
    while (clf_.size() <= n)
        clf_.push_back(clf_from_weights(clf_weight_, static_cast<unsigned long>(clf_.size())));
}

void SequenceCache::grow_harmonic(unsigned long n) {
    while (harmonic_.size() <= n) {
        const auto k = static_cast<unsigned long>(harmonic_.size());
        harmonic_.push_back(harmonic_.back() + Rational(Integer(1), Integer(k)));
    }
}

void SequenceCache::grow_odd_harmonic(unsigned long n) {
    while (odd_harmonic_.size() <= n) {
        const auto j = static_cast<unsigned long>(odd_harmonic_.size());
        odd_harmonic_.push_back(odd_harmonic_.back() + Rational(Integer(1), Integer(2 * j - 1)));
    }
}

bool SequenceCache::tables_consistent() const {
    std::shared_lock lock(mutex_);
    if (bernoulli_.empty() || bernoulli_[0] != Rational(1))
        return false;
    for (std::size_t n = 1; n < bernoulli_.size(); ++n)
        if (!bernoulli_recurrence_sum(bernoulli_, n).is_zero())
            return false;
    if (euler_.empty() || euler_[0] != 1)
        return false;
    for (std::size_t n = 1; n < euler_.size(); ++n)
        if (euler_recurrence_value(euler_, n) != euler_[n])
            return false;
    return true;
}

Integer clf_definitional(unsigned long n) {
    std::vector<Integer> w;
    extend_clf_weights(w, n);
    return clf_from_weights(w, n);
}

Integer clf_even_form(unsigned long n) {
    const long ln = static_cast<long>(n);
    Integer sum = 0;
    for (long k = 0; 2 * k <= ln; ++k) {
        Integer c = binomial(2 * k, k);
        Integer four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(ln - 2 * k));
        sum += binomial(ln, 2 * k) * c * c * four;
    }
    return sum << n;
}

Integer clf_next_by_recurrence(unsigned long n, const Integer& p_n, const Integer& p_prev,
                               RecurrenceForm form) {
    if (n == 0)
        throw Error(Errc::InvalidArgument, "the CLF recurrence needs n >= 1");
    const Integer nn = n;
    Integer rhs = (24 * nn * (nn + 1) + 8) * p_n - 128 * nn * nn * p_prev;
    Integer lead = (form == RecurrenceForm::Corrected) ? Integer((nn + 1) * (nn + 1)) : Integer(nn + 1);
    if (!mpz_divisible_p(rhs.get_mpz_t(), lead.get_mpz_t()))
        throw Error(Errc::NonDivisible, "CLF recurrence at n=" + std::to_string(n) + ": " +
                                            to_string(rhs) + " is not divisible by " + to_string(lead));
    Integer out;
    mpz_divexact(out.get_mpz_t(), rhs.get_mpz_t(), lead.get_mpz_t());
    return out;
}

Integer zagier_s(unsigned long n) {
    const long ln = static_cast<long>(n);
    Integer sum = 0;
    for (long k = 0; 2 * k <= ln; ++k) {
        Integer c = binomial(2 * k, k);
        Integer four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(ln - 2 * k));
        sum += c * c * binomial(ln, 2 * k) * four;
    }
    if ((sum << n) != clf_definitional(n))
        throw Error(Errc::NonDivisible, "2^n S_n != P_n at n=" + std::to_string(n));
    return sum;
}

Integer s_sun_form_a(unsigned long n) {
    const long ln = static_cast<long>(n);
    Integer sum = 0;
    for (long k = 0; k <= ln; ++k) {
        Integer c = binomial(2 * k, k);
        Integer m4;
        mpz_ui_pow_ui(m4.get_mpz_t(), 4, static_cast<unsigned long>(ln - k));
        if ((ln - k) % 2 == 1)
            m4 = -m4;
        sum += c * c * binomial(k, ln - k) * m4;
    }
    return sum;
}

Integer s_sun_form_b(unsigned long n) {
    const long ln = static_cast<long>(n);
    Integer sum = 0;
    for (long k = 0; k <= ln; ++k) {
        Integer m4;
        mpz_ui_pow_ui(m4.get_mpz_t(), 4, static_cast<unsigned long>(k));
        if (k % 2 == 1)
            m4 = -m4;
        sum += binomial(2 * k, k) * binomial(2 * (ln - k), ln - k) * binomial(k, ln - k) * m4;
    }
    Integer scale = Integer(1) << n;
    if (n % 2 == 1)
        scale = -scale;
    Rational s(sum, scale);
    if (!s.is_integer())
        throw Error(Errc::NonInteger, "second alternative S_n form is not integral at n=" + std::to_string(n));
    return s.num();
}

namespace {

void require_odd_prime(unsigned long p) {
    if (p == 2 || !is_prime(Integer(p)))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
}

} // namespace

Integer fermat_quotient_two(unsigned long p) {
    require_odd_prime(p);
    Integer pow2 = Integer(1) << (p - 1);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), Integer(pow2 - 1).get_mpz_t(), p);
    return q;
}

int legendre_minus_one(unsigned long p) {
    require_odd_prime(p);
    return (p % 4 == 1) ? 1 : -1;
}

std::vector<unsigned long> primes_up_to(unsigned long bound) {
    std::vector<unsigned long> primes;
    if (bound < 2)
        return primes;
    std::vector<bool> composite(bound + 1, false);
    for (unsigned long i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

} // namespace clfcong
