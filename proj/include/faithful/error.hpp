#pragma once

#include <stdexcept>
#include <string>

namespace faithful {

/// Input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured budget. Faithfulness is never
/// guessed, so callers get this instead of an approximate answer.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction broke one of its own invariants. Signals a bug, not bad
/// input.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace faithful
