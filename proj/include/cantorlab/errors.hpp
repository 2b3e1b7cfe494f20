#pragma once

#include <stdexcept>
#include <string>

namespace cantorlab {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A hypothesis the operation relies on is missing (e.g. no monotonicity
// witness for the dimension function). Exit code 2.
class HypothesisViolation : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// Evaluation outside the domain of a real-valued expression (log of a
// non-positive number, sqrt of a negative one, ...). Exit code 2.
class DomainError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// An enumeration or level budget would be exceeded. Exit code 3.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enclosure could not be made narrow enough within the precision budget.
// Exit code 3.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// floor_power and friends: the enclosure still straddles an integer at the
// maximum precision. Never resolved by guessing.
class UndecidableError : public PrecisionError {
public:
    using PrecisionError::PrecisionError;
};

} // namespace cantorlab
