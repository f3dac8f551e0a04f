#pragma once

#include <stdexcept>
#include <string>

namespace sched {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input rejected: bad field values, duplicate or dangling ids.
class ValueError : public Error {
  public:
    using Error::Error;
};

/// The precedence relation contains a directed cycle.
class CycleError : public Error {
  public:
    using Error::Error;
};

/// Malformed instance text; carries a 1-based line and column.
class ParseError : public Error {
  public:
    ParseError(const std::string &message, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] int column() const noexcept { return column_; }

  private:
    int line_;
    int column_;
};

/// Solver errors: these map to CLI exit code 3.
class SolverError : public Error {
  public:
    using Error::Error;
};

class IterationLimit : public SolverError {
  public:
    using SolverError::SolverError;
};

class NumericalError : public SolverError {
  public:
    using SolverError::SolverError;
};

class InfeasibleLp : public SolverError {
  public:
    using SolverError::SolverError;
};

class UnboundedLp : public SolverError {
  public:
    using SolverError::SolverError;
};

/// A computed job order does not extend the precedence relation.
class PrecedenceViolation : public Error {
  public:
    using Error::Error;
};

/// A caller-supplied order is not a precedence-respecting permutation.
class OrderViolatesPrecedence : public Error {
  public:
    using Error::Error;
};

/// Instance exceeds the size limit of an exhaustive routine.
class TooLarge : public Error {
  public:
    using Error::Error;
};

/// Schedule handed to alpha-point conversion is not a preemptive list schedule.
class NotListSchedule : public Error {
  public:
    using Error::Error;
};

}  // namespace sched
