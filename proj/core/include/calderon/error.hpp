#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace calderon {

enum class ErrorCode {
  kInvalidSpec,
  kUnknownGallery,
  kDimensionMismatch,
  kOutOfRange,
  kNoFreeRay,
  kDefectMode,
  kContourNotConverged,
  kContourNotSeparating,
  kEigenvalueOnContour,
  kEigenvalueOnCut,
  kSingularBlock,
  kIllConditionedFrame,
  kDegenerateFit,
  kCutoffMismatch,
  kInsufficientData,
  kThresholdAmbiguous,
  kTailUnsafe,
  kNoChiralStructure,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is the
// machine-readable tag emitted by the CLI error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace calderon
