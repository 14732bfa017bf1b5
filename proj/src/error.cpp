#include "titree/error.hpp"

namespace titree {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotATree: return "NotATree";
    case Errc::BadLabel: return "BadLabel";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::Overflow: return "Overflow";
    case Errc::BadFamilyParams: return "BadFamilyParams";
    case Errc::BranchIsAlreadyPath: return "BranchIsAlreadyPath";
    case Errc::NotPendentPaths: return "NotPendentPaths";
    case Errc::LengthOrderViolated: return "LengthOrderViolated";
    case Errc::InconsistentSizes: return "InconsistentSizes";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NonIntegerResult: return "NonIntegerResult";
    case Errc::ParityError: return "ParityError";
    case Errc::DichotomyViolated: return "DichotomyViolated";
    case Errc::NotTI: return "NotTI";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::MalformedSparse6: return "MalformedSparse6";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(Errc::ParseError, "at " + std::to_string(position) + ": " + what),
      position_(position) {}

}  // namespace titree
