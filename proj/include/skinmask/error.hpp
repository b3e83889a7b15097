#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skinmask {

enum class ErrorCode {
  kDegenerateBlack,
  kEmptyImage,
  kDimensionMismatch,
  kNotFound,
  kUnsupportedFormat,
  kCorruptFile,
  kIoWrite,
  kUndefinedPrecision,
  kEmptyComparison,
  kEmptyInput,
  kInvalidConfig,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can branch on the kind of failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skinmask
