#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symtensor {

enum class ErrorKind {
  kUsage,               // mismatched specs, arity mismatch, bad arguments
  kUnsupportedRing,     // operation undefined for this ring family
  kUnsupportedKind,     // multiplicative-set kind unsupported over this base
  kNotInvertible,
  kInvalidIndex,
  kPrecondition,
  kInvariantViolation,  // internal oracle disagreement: always a library bug
  kOracleInfeasible,
  kEnumerationTooLarge,
  kParse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorKind::kParse,
              message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace symtensor
