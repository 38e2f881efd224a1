#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pk {

enum class ErrorKind {
  ArityMismatch,
  DegreeMismatch,
  NotHomogeneous,
  DegreeBoundExceeded,
  SingularMatrix,
  ZeroInput,
  FixedComponent,
  Proportional,
  NotAMorphism,
  NotCoprime,
  UnresolvedAlgebraicMember,
  NormConstructionBound,
  BadLine,
  NotInvariant,
  DichotomyViolation,
  InvalidFamily,
  Precondition,
  Syntax,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the byte span of the offending input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset, std::size_t length)
      : Error(ErrorKind::Syntax, what), offset_(offset), length_(length) {}

  std::size_t offset() const { return offset_; }
  std::size_t length() const { return length_; }

 private:
  std::size_t offset_;
  std::size_t length_;
};

}  // namespace pk
