#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace numerosity {

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

inline Ordering flip(Ordering o) {
  return static_cast<Ordering>(-static_cast<int>(o));
}

const char* to_string(Ordering o);

// Base of every error raised by the library. kind() is the stable error
// name surfaced by the CLI ("Unsupported", "DivisionByZero", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define NUMEROSITY_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  }

NUMEROSITY_ERROR(Unsupported);
NUMEROSITY_ERROR(ZeroArgument);
NUMEROSITY_ERROR(DivisionByZero);
NUMEROSITY_ERROR(NonPositiveGamma);
NUMEROSITY_ERROR(InconsistentAxiom);
NUMEROSITY_ERROR(NonIntegral);
NUMEROSITY_ERROR(IndexTooLarge);
NUMEROSITY_ERROR(UnrecognizedBasis);
NUMEROSITY_ERROR(Uncompilable);
NUMEROSITY_ERROR(NotSeparated);
NUMEROSITY_ERROR(RecursionCapExceeded);
NUMEROSITY_ERROR(UnknownElement);
NUMEROSITY_ERROR(NotABijection);
NUMEROSITY_ERROR(InstanceFormatError);

#undef NUMEROSITY_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : Error("ParseError", "at " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace numerosity
