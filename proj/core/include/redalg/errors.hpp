#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace redalg {

/// Base of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported family/rank, malformed config, bad parabolic subset.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Division by zero and similar field-level failures.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different algebra contexts, or an element uses
/// generators the context does not have.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// A hard cap (closure size, exponent width) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input failed (e.g. cutting a relation
/// whose right-hand side is not in I).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A statement that must hold by the theory failed. Always an engine bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Internal inconsistency (singular projector system, etc.).
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace redalg
