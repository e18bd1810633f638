#pragma once

#include <stdexcept>
#include <string>

namespace tfp {

// Invalid arguments are reported with std::invalid_argument.

/// A caller broke an operation's precondition (for example adding a pair that
/// is not open). Indicates a bug or a corrupted sampler, never bad user input.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a step is requested after the last open pair disappeared.
class ProcessTerminated : public std::runtime_error {
 public:
  ProcessTerminated() : std::runtime_error("process terminated: no open pairs remain") {}
};

/// Work budget (time or node count) exhausted before an exact answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tfp
