#pragma once

// Exact integers and rationals, and their images in Z/p^eZ.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "clfcong/error.hpp"

namespace clfcong {

using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& n);

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) : q_(Integer(n)) {}

    Rational(const Integer& n) : q_(n) {}

    // Throws DivisionByZero when den == 0.
    Rational(const Integer& num, const Integer& den);

    // Accepts "a" or "a/b" in decimal.
    static Rational parse(std::string_view text);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }

    // Throws NonInteger unless the denominator is 1.
    Integer to_integer() const;

    std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class q_;
};

Rational pow(const Rational& base, long exp);

bool is_prime(const Integer& n);

/// Exponent of p in n. Zero has infinite valuation.
struct Valuation {
    bool infinite = false;
    unsigned long value = 0;

    static Valuation infinity() { return {true, 0}; }

    bool operator==(const Valuation&) const = default;
    bool at_least(unsigned long v) const { return infinite || value >= v; }
};

// Throws NotPrime unless p is prime.
Valuation padic_valuation(const Integer& n, const Integer& p);

// min(v_p(n), cap); zero yields cap. p is assumed prime.
unsigned long padic_valuation_capped(const Integer& n, const Integer& p,
                                     unsigned long cap);

class PrimePowerModulus {
public:
    // Throws NotPrime for composite p and InvalidArgument for e == 0.
    PrimePowerModulus(const Integer& p, unsigned e);

    const Integer& prime() const { return data_->p; }
    unsigned exponent() const { return data_->e; }
    const Integer& value() const { return data_->m; }

    friend bool operator==(const PrimePowerModulus& a, const PrimePowerModulus& b) {
        return a.data_ == b.data_ || (a.data_->e == b.data_->e && a.data_->p == b.data_->p);
    }

private:
    struct Data {
        Integer p;
        unsigned e;
        Integer m;
    };
    std::shared_ptr<const Data> data_;
};

/// Canonical residue in [0, p^e).
class Residue {
public:
    Residue(const Integer& value, PrimePowerModulus modulus);

    const Integer& value() const { return value_; }
    const PrimePowerModulus& modulus() const { return modulus_; }

    // Mixing moduli throws ModulusMismatch.
    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }

private:
    Integer value_;
    PrimePowerModulus modulus_;
};

// Throws NotInvertible when p | a.
Residue mod_inverse(const Integer& a, const PrimePowerModulus& m);

// Throws DenominatorDivisibleByP when p divides the denominator.
Residue reduce(const Rational& x, const PrimePowerModulus& m);

Residue pow_mod(const Integer& base, unsigned long exp, const PrimePowerModulus& m);

} // namespace clfcong
