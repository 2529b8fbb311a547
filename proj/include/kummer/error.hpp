#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

enum class ErrorKind {
  MalformedValue,
  NegateInfinity,
  NotPrime,
  Syntax,
  DivisionByZero,
  NotAdjoined,
  NegativeValuation,
  ZeroArgument,
  ZeroH,
  NotInA,
  IterationCap,
  PreconditionViolated,
  SamplerExhausted,
  NotBestPair,
  NotUnitOneClass,
  NotInSPrime,
  GammaNotInValueGroup,
  InvalidArgument,
  MalformedFamily,
  FieldMismatch,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry the 0-based byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Syntax,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kummer
