#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace congr {

enum class ErrorKind {
  ContextMismatch,
  CommutativityViolation,
  AssociativityViolation,
  UnitViolation,
  IncompatibleModulus,
  DimensionTooLarge,
  NotUnipotent,
  NotSpecialLinear,
  IndexOutOfRange,
  PreconditionViolated,
  TooLarge,
  ExcludedCase,
  TruncationTooSmall,
  Overflow,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace congr

/// Like require, but the message expression is only evaluated on failure.
#define CONGR_REQUIRE(cond, kind, msg)         \
  do {                                         \
    if (!(cond)) ::congr::fail((kind), (msg)); \
  } while (0)
