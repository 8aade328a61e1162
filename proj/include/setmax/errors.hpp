#pragma once

#include <stdexcept>
#include <string>

namespace setmax {

// Malformed or out-of-range input supplied by a caller (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition the caller was required to establish does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal structure is inconsistent; indicates a bug rather than bad input.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace setmax
