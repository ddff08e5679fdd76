#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tcx {

enum class ErrorCode {
  MalformedInput,
  SimplicialIdentityViolation,
  Disconnected,
  DimensionExceeded,
  MissingAlpha,
  WeakConstraintViolated,
  WrongDimension,
  IndexMismatch,
  NotRidgeSupported,
  DegenerateCut,
  DiscontinuousInput,
  NotQCartierNearCurve,
  NotBalanced,
  InconsistentSheets,
  NonUnimodular,
  NoSolution,
  NotConstantOnUnbounded,
  InconsistentData,
  UnknownName,
  PreconditionFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending simplex, field or identity.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace tcx
