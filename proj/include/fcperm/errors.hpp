#pragma once

#include <stdexcept>
#include <string>

namespace fcperm {

// Input violates an operation's contract (bad text, wrong degree, non-FC
// input where FC is required, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration guard was hit. Carries the requested size and the bound.
class LimitExceeded : public std::length_error {
 public:
  LimitExceeded(const std::string& what, long long requested, long long bound)
      : std::length_error(what + " (requested " + std::to_string(requested) +
                          ", bound " + std::to_string(bound) + ")"),
        requested_(requested),
        bound_(bound) {}

  long long requested() const noexcept { return requested_; }
  long long bound() const noexcept { return bound_; }

 private:
  long long requested_;
  long long bound_;
};

// An embedded mathematical self-check failed. This is never expected to
// fire; if it does, the message names the property that broke.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fcperm
