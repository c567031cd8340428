#pragma once

#include <stdexcept>
#include <string>

namespace macdual {

enum class ErrorKind {
  ContextMismatch,
  LengthMismatch,
  InvalidDivisor,
  UnboundedQuotient,
  DegenerateInput,
  SearchExhausted,
  Inconsistency,
  Pipeline,
  Parse,
  Usage,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers (the CLI in
/// particular) whether the failure is mathematical or a usage problem.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Mathematical rejections (non-Artinian input, non-regular sequence, ...)
  /// as opposed to malformed input.
  bool is_mathematical() const noexcept {
    return kind_ != ErrorKind::Parse && kind_ != ErrorKind::Usage;
  }

 private:
  ErrorKind kind_;
};

}  // namespace macdual
