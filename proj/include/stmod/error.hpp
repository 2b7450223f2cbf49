#pragma once

#include <stdexcept>
#include <string>

namespace stmod {

// Malformed input: bad specs, invalid matrices, violated group relations.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A requested computation exceeds a configured size cap.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Two independent computations disagreed, or a certificate failed to re-check.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace stmod
