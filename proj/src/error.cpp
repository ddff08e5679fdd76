#include "tcx/error.hpp"

namespace tcx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::SimplicialIdentityViolation: return "SimplicialIdentityViolation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DimensionExceeded: return "DimensionExceeded";
    case ErrorCode::MissingAlpha: return "MissingAlpha";
    case ErrorCode::WeakConstraintViolated: return "WeakConstraintViolated";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::NotRidgeSupported: return "NotRidgeSupported";
    case ErrorCode::DegenerateCut: return "DegenerateCut";
    case ErrorCode::DiscontinuousInput: return "DiscontinuousInput";
    case ErrorCode::NotQCartierNearCurve: return "NotQCartierNearCurve";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::InconsistentSheets: return "InconsistentSheets";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotConstantOnUnbounded: return "NotConstantOnUnbounded";
    case ErrorCode::InconsistentData: return "InconsistentData";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

}  // namespace tcx
