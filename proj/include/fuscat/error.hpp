#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuscat {

enum class Errc {
  DivisionByZero,
  ConductorNotDivisible,
  Validation,
  ConvergenceFailure,
  ExactDataMissing,
  RankTooLarge,
  NotAlgebraMap,
  SingularTable,
  NoFPColumn,
  DegenerateSpectrum,
  NotIdempotent,
  IndexNotInJD,
  InconsistentCoset,
  PreconditionFailed,
  AsymmetricS,
  BadFirstRow,
  PsiNotCharacter,
  NoMatchingColumn,
  UnknownKey,
  Schema,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the witnessing indices where there are any.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace fuscat
