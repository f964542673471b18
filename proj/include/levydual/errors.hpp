#pragma once

#include <stdexcept>
#include <string>

namespace levydual {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside an exponential-moment domain or an admissible strip.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("DomainError: " + what) {}
};

/// The jump measure kind cannot be integrated generically (closed-form families).
class UnsupportedMeasure : public Error {
 public:
  explicit UnsupportedMeasure(const std::string& what)
      : Error("UnsupportedMeasure: " + what) {}
};

/// The model backend does not implement the requested operation.
class UnsupportedModel : public Error {
 public:
  explicit UnsupportedModel(const std::string& what) : Error("UnsupportedModel: " + what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("DimensionMismatch: " + what) {}
};

class DegenerateDirection : public Error {
 public:
  explicit DegenerateDirection(const std::string& what)
      : Error("DegenerateDirection: " + what) {}
};

class UnavailableDrift : public Error {
 public:
  explicit UnavailableDrift(const std::string& what) : Error("UnavailableDrift: " + what) {}
};

/// Invalid parameters at construction time.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("InvalidArgument: " + what) {}
};

/// Numerical failures: the caller may retry with different settings.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public NumericalError {
 public:
  explicit QuadratureError(const std::string& what)
      : NumericalError("QuadratureError: " + what) {}
};

class ContourError : public NumericalError {
 public:
  explicit ContourError(const std::string& what) : NumericalError("ContourError: " + what) {}
};

}  // namespace levydual
