#pragma once

#include <stdexcept>
#include <string>

namespace hypermat {

enum class ErrorCode {
  kInvalidArgument,
  kVertexOutOfRange,
  kEdgeOutOfRange,
  kEmptyEdge,
  kDuplicateVertexInEdge,
  kOverlappingBlocks,
  kInvalidPartition,
  kMalformedInput,
  kNoFiniteCut,
  kLoopPresent,
  kNegativeEntry,
  kSizeGuard,
  kInternal,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kEdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::kEmptyEdge: return "EmptyEdge";
    case ErrorCode::kDuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::kOverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kNoFiniteCut: return "NoFiniteCut";
    case ErrorCode::kLoopPresent: return "LoopPresent";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kSizeGuard: return "SizeGuard";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when an internal consistency check fails. Indicates a bug, never a
/// bad input.
[[noreturn]] inline void internal_failure(const std::string& what) {
  throw Error(ErrorCode::kInternal, what);
}

#define HYPERMAT_CHECK(cond, msg)                                  \
  do {                                                             \
    if (!(cond)) ::hypermat::internal_failure(std::string(msg) +   \
                                              " [" #cond "]");     \
  } while (false)

}  // namespace hypermat
