#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A ring, polynomial or search exceeded a configured size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A precondition of an operation was violated (not an idempotent, not an ideal, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Product of two polynomials would exceed the degree cap.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ringlab
