#pragma once

#include <stdexcept>
#include <string>

namespace shg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// p = 2, 3 or a composite modulus
class UnsupportedPrime : public DomainError {
public:
    explicit UnsupportedPrime(unsigned long p)
        : DomainError("unsupported prime " + std::to_string(p) + " (need a prime >= 5)"), prime(p) {}
    unsigned long prime;
};

class PrimeMismatch : public Error {
public:
    PrimeMismatch(unsigned long p, unsigned long q)
        : Error("prime mismatch: " + std::to_string(p) + " vs " + std::to_string(q)) {}
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class PrecisionError : public Error {
public:
    PrecisionError(long required, long available)
        : Error("precision: need " + std::to_string(required) + " digits, have " +
                std::to_string(available)),
          required_abs_prec(required),
          available_abs_prec(available) {}
    long required_abs_prec;
    long available_abs_prec;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace shg
