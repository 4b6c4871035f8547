#pragma once

#include <stdexcept>
#include <string>

namespace teletopo {

// Shape mismatch: wrong dimensions, non-square, non-power-of-two side.
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Requested object exceeds the dense-storage caps.
class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

// Malformed JSON input, or a value that violates a type invariant on load.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid argument value (zero state, non-finite entry, bad tolerance).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Operation precondition failed (e.g. a gate that is not unitary).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Measurement basis is not orthonormal or not complete.
class BasisError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Diagram failed validation; what() carries the first diagnostic.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// An internal cross-check disagreed with itself.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace teletopo
