#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace foldhom {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Coloring operations are undefined on graphs with loops.
class LoopedGraphError : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

/// A configured size/time budget would be exceeded. `required` carries the
/// size that was asked for when it is known (0 otherwise).
class BudgetExceeded : public Error {
  public:
    BudgetExceeded(const std::string& what, std::uint64_t required = 0)
        : Error(what), required_(required) {}

    std::uint64_t required() const noexcept { return required_; }

  private:
    std::uint64_t required_;
};

/// An internal consistency check failed (a construction produced something
/// that one of its own certificates rejects).
class InternalError : public Error {
  public:
    using Error::Error;
};

}  // namespace foldhom
