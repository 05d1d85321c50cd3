#pragma once

#include <stdexcept>

namespace localconst {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (bad prime, m not dividing m', ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A p-adic quantity is not known to enough digits for the requested result.
class PrecisionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace localconst
