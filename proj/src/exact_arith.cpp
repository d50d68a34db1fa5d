#include "clfcong/exact_arith.hpp"

#include <utility>

namespace clfcong {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonInteger: return "NonInteger";
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::UnknownCheck: return "UnknownCheck";
    case Errc::CacheInvalid: return "CacheInvalid";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    bool digits = !s.empty();
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '-' && i == 0 && s.size() > 1)
            continue;
        if (c < '0' || c > '9')
            digits = false;
    }
    if (!digits)
        throw Error(Errc::InvalidArgument, "not a decimal integer: '" + std::string(text) + "'");
    return Integer(s, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw Error(Errc::DivisionByZero, "rational with zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)),
                    parse_integer(text.substr(slash + 1)));
}

Integer Rational::to_integer() const {
    if (!is_integer())
        throw Error(Errc::NonInteger, "expected an integer, got " + str());
    return num();
}

std::string Rational::str() const {
    if (is_integer())
        return to_string(num());
    return to_string(num()) + "/" + to_string(den());
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw Error(Errc::DivisionByZero, "rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.q_ = -r.q_;
    return r;
}

Rational pow(const Rational& base, long exp) {
    if (exp < 0)
        return Rational(1) / pow(base, -exp);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(num, den);
}

bool is_prime(const Integer& n) {
    if (n < 2)
        return false;
    // GMP's test is deterministic below 2^64 after its trial division and
    // BPSW stage; every prime used here is far smaller.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Valuation padic_valuation(const Integer& n, const Integer& p) {
    if (!is_prime(p))
        throw Error(Errc::NotPrime, to_string(p) + " is not prime");
    if (n == 0)
        return Valuation::infinity();
    Integer rest = abs(n);
    unsigned long v = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return {false, v};
}

unsigned long padic_valuation_capped(const Integer& n, const Integer& p, unsigned long cap) {
    if (n == 0)
        return cap;
    Integer rest = n;
    unsigned long v = 0;
    while (v < cap && mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

PrimePowerModulus::PrimePowerModulus(const Integer& p, unsigned e) {
    if (e == 0)
        throw Error(Errc::InvalidArgument, "prime power exponent must be >= 1");
    if (!is_prime(p))
        throw Error(Errc::NotPrime, to_string(p) + " is not prime");
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), e);
    data_ = std::make_shared<const Data>(Data{p, e, std::move(m)});
}

Residue::Residue(const Integer& value, PrimePowerModulus modulus)
    : modulus_(std::move(modulus)) {
    mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), modulus_.value().get_mpz_t());
}

namespace {

void require_same(const Residue& a, const Residue& b) {
    if (!(a.modulus() == b.modulus()))
        throw Error(Errc::ModulusMismatch, "residues modulo different prime powers");
}

} // namespace

Residue operator+(const Residue& a, const Residue& b) {
    require_same(a, b);
    return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
    require_same(a, b);
    return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
    require_same(a, b);
    return Residue(a.value_ * b.value_, a.modulus_);
}

Residue mod_inverse(const Integer& a, const PrimePowerModulus& m) {
    if (mpz_divisible_p(a.get_mpz_t(), m.prime().get_mpz_t()))
        throw Error(Errc::NotInvertible,
                    to_string(a) + " is not invertible modulo " + to_string(m.value()));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.value().get_mpz_t());
    return Residue(inv, m);
}

Residue reduce(const Rational& x, const PrimePowerModulus& m) {
    if (mpz_divisible_p(x.den().get_mpz_t(), m.prime().get_mpz_t())) {
        auto v = padic_valuation(x.den(), m.prime()).value;
        throw DenominatorDivisibleByP(
            v, "denominator of " + x.str() + " has " + to_string(m.prime()) + "-adic valuation " +
                   std::to_string(v));
    }
    Residue num(x.num(), m);
    if (x.is_integer())
        return num;
    return num * mod_inverse(x.den(), m);
}

Residue pow_mod(const Integer& base, unsigned long exp, const PrimePowerModulus& m) {
    Residue acc(1, m);
    Residue sq(base, m);
    while (exp > 0) {
        if (exp & 1UL)
            acc = acc * sq;
        sq = sq * sq;
        exp >>= 1;
    }
    return acc;
}

} // namespace clfcong
