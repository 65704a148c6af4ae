#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latdyn {

// Bad input: malformed specs, precondition violations, out-of-domain
// arguments.  The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Floating-point breakdown (non-finite values, iteration caps).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not.  Never expected in practice.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class WalkAborted : public NumericalError {
 public:
  WalkAborted(std::uint64_t step, const std::string& what)
      : NumericalError("walk aborted at step " + std::to_string(step) + ": " + what), step_(step) {}
  std::uint64_t step() const { return step_; }

 private:
  std::uint64_t step_;
};

}  // namespace latdyn
