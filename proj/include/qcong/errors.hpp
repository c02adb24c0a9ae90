#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero polynomial") {}
};

struct NonMonicDivisor : Error {
    NonMonicDivisor() : Error("divisor leading coefficient is not +1 or -1") {}
};

struct InvalidRange : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct NotPrime : Error {
    explicit NotPrime(long long p) : Error("p = " + std::to_string(p) + " is not prime") {}
};

struct HypothesisViolated : Error {
    using Error::Error;
};

struct NonIntegralCoefficient : Error {
    using Error::Error;
};

struct ResourceCap : Error {
    using Error::Error;
};

}  // namespace qcong
