#include "fuscat/error.hpp"

namespace fuscat {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ConductorNotDivisible: return "ConductorNotDivisible";
    case Errc::Validation: return "ValidationError";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::ExactDataMissing: return "ExactDataMissing";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::NotAlgebraMap: return "NotAlgebraMap";
    case Errc::SingularTable: return "SingularTable";
    case Errc::NoFPColumn: return "NoFPColumn";
    case Errc::DegenerateSpectrum: return "DegenerateSpectrum";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::IndexNotInJD: return "IndexNotInJD";
    case Errc::InconsistentCoset: return "InconsistentCoset";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::AsymmetricS: return "AsymmetricS";
    case Errc::BadFirstRow: return "BadFirstRow";
    case Errc::PsiNotCharacter: return "PsiNotCharacter";
    case Errc::NoMatchingColumn: return "NoMatchingColumn";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::Schema: return "SchemaError";
  }
  return "Error";
}

}  // namespace fuscat
