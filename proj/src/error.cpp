#include "vbs/error.hpp"

namespace vbs {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MissingField: return "MissingField";
    case Errc::ConflictingFields: return "ConflictingFields";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonPositiveFrequency: return "NonPositiveFrequency";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NotBlockDiagonal: return "NotBlockDiagonal";
    case Errc::InconsistentUnits: return "InconsistentUnits";
    case Errc::SingularJ: return "SingularJ";
    case Errc::QuantaLimitExceeded: return "QuantaLimitExceeded";
    case Errc::PhotonNumberMismatch: return "PhotonNumberMismatch";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::EmptyDistribution: return "EmptyDistribution";
    case Errc::ExplosionGuard: return "ExplosionGuard";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace vbs
