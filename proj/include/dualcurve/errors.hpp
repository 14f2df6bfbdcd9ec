#pragma once

#include <stdexcept>
#include <string>

namespace dualcurve {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the mathematical domain of an operation (sqrt of a
/// negative real part, log of a non-positive value, division by zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Norm or normalization of a dual vector whose real part vanishes.
class PureDualVectorError : public Error {
 public:
  using Error::Error;
};

/// Curve evaluated outside its parameter interval.
class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

/// A dual curve failed the admissibility conditions (regular real part,
/// orthogonal velocities). Carries which condition failed.
class NotAdmissibleError : public Error {
 public:
  enum class Reason { RealPartNotRegular, VelocitiesNotOrthogonal };

  NotAdmissibleError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Frame undefined: curvature of the real part vanishes at the query point.
class VanishingCurvatureError : public Error {
 public:
  VanishingCurvatureError(double s, const std::string& what)
      : Error(what), s_(s) {}

  double parameter() const { return s_; }

 private:
  double s_;
};

class NotNormalizedError : public Error {
 public:
  using Error::Error;
};

class NotUnitSpeedError : public Error {
 public:
  using Error::Error;
};

/// Prescribed curvature has a non-positive real part somewhere.
class NonPositiveCurvatureError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: step limit exceeded or non-finite state encountered.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exceeded its subdivision limit.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Root target not bracketed by the supplied interval.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Expression text failed to parse. Carries the byte offset of the error.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(what), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Identifier is neither a known function/constant nor bound by the caller.
class UnknownIdentifierError : public Error {
 public:
  UnknownIdentifierError(std::string name, const std::string& what)
      : Error(what), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Bad user-facing configuration (CLI flags, config file, parameters).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace dualcurve
