#include "skinmask/error.hpp"

namespace skinmask {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateBlack: return "degenerate-black";
    case ErrorCode::kEmptyImage: return "empty-image";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kUnsupportedFormat: return "unsupported-format";
    case ErrorCode::kCorruptFile: return "corrupt-file";
    case ErrorCode::kIoWrite: return "io-write";
    case ErrorCode::kUndefinedPrecision: return "undefined-precision";
    case ErrorCode::kEmptyComparison: return "empty-comparison";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kInvalidConfig: return "invalid-config";
  }
  return "unknown";
}

}  // namespace skinmask
