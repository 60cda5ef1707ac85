#pragma once

#include <stdexcept>
#include <string>

namespace rackhom {

// Malformed or out-of-range input (tables, permutations, files).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called on a structure that does not satisfy its
// precondition (e.g. a non-rack where a rack is required).
class Unsupported : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A checked algebraic contract failed (e.g. out * in != 0).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Refusal to build a matrix or basis above the configured caps.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rackhom
