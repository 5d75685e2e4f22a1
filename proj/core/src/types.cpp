#include <cmath>
#include <sstream>

#include "calderon/error.hpp"
#include "calderon/types.hpp"

namespace calderon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kUnknownGallery: return "UnknownGallery";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNoFreeRay: return "NoFreeRay";
    case ErrorCode::kDefectMode: return "DefectMode";
    case ErrorCode::kContourNotConverged: return "ContourNotConverged";
    case ErrorCode::kContourNotSeparating: return "ContourNotSeparating";
    case ErrorCode::kEigenvalueOnContour: return "EigenvalueOnContour";
    case ErrorCode::kEigenvalueOnCut: return "EigenvalueOnCut";
    case ErrorCode::kSingularBlock: return "SingularBlock";
    case ErrorCode::kIllConditionedFrame: return "IllConditionedFrame";
    case ErrorCode::kDegenerateFit: return "DegenerateFit";
    case ErrorCode::kCutoffMismatch: return "CutoffMismatch";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kThresholdAmbiguous: return "ThresholdAmbiguous";
    case ErrorCode::kTailUnsafe: return "TailUnsafe";
    case ErrorCode::kNoChiralStructure: return "NoChiralStructure";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

double Mode::norm() const { return std::sqrt(norm_squared()); }

std::string Mode::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) os << ',';
    os << m_[i];
  }
  os << ')';
  return os.str();
}

}  // namespace calderon
