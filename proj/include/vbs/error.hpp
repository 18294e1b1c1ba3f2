#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vbs {

enum class Errc {
  MissingField,
  ConflictingFields,
  DimensionMismatch,
  NonPositiveFrequency,
  NotOrthogonal,
  NotBlockDiagonal,
  InconsistentUnits,
  SingularJ,
  QuantaLimitExceeded,
  PhotonNumberMismatch,
  SizeLimitExceeded,
  DimensionTooLarge,
  EmptyDistribution,
  ExplosionGuard,
  InvalidArgument,
  Io,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Library error. `code()` identifies the failure kind; `what()` carries a
/// human-readable explanation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vbs
