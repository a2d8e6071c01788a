#pragma once

#include <stdexcept>
#include <string>

namespace clv {

// Malformed or dimensionally inconsistent input supplied by a caller.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation produced a result that contradicts a structural guarantee,
// e.g. a class that cannot be represented by a curve.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace clv
