#pragma once

#include <stdexcept>
#include <string>

namespace paretotail {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sample preparation / estimation.
class EmptySampleError : public Error {
 public:
  using Error::Error;
};
class TooFewTailObsError : public Error {
 public:
  using Error::Error;
};
class DegenerateTailError : public Error {
 public:
  using Error::Error;
};

// Equality testing.
class TailTooShortError : public Error {
 public:
  using Error::Error;
};
class MissingCriticalValueError : public Error {
 public:
  using Error::Error;
};

// Theory solvers.
class NoRootError : public Error {
 public:
  using Error::Error;
};
class AssumptionViolatedError : public Error {
 public:
  using Error::Error;
};

// Policy solver.
class InfeasibleGridError : public Error {
 public:
  using Error::Error;
};
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

// Data pipeline.
class SchemaError : public Error {
 public:
  using Error::Error;
};
class TooManyBadRowsError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};

/// Wraps a module error with the name of the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(const std::string& stage, const std::string& what)
      : Error("stage '" + stage + "': " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace paretotail
