#pragma once

#include <stdexcept>
#include <string>

namespace clfcong {

enum class Errc {
    InvalidArgument = 1,
    NotPrime,
    NotInvertible,
    DenominatorDivisibleByP,
    DivisionByZero,
    NonInteger,
    NonDivisible,
    NotApplicable,
    ModulusMismatch,
    UnknownCheck,
    CacheInvalid,
    Io,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Raised when a rational has to be read modulo p^e but its denominator
// carries a factor of p.
class DenominatorDivisibleByP : public Error {
public:
    DenominatorDivisibleByP(unsigned long valuation, const std::string& what)
        : Error(Errc::DenominatorDivisibleByP, what), valuation_(valuation) {}

    unsigned long valuation() const noexcept { return valuation_; }

private:
    unsigned long valuation_;
};

} // namespace clfcong
