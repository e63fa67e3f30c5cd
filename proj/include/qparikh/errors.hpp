#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qparikh {

enum class ErrorCode {
  UnknownCharacter,
  EmptyPeriod,
  DegreeExceeded,
  NotUnitriangular,
  DimensionMismatch,
  TooManyOccurrences,
  ErasingMorphism,
  EmptyInducingWord,
  AdjacentRepeatedLetter,
  NonExactDivision,
  LetterAbsent,
  AllZeroClass,
  InsufficientSamples,
  HypothesisViolated,
  NonMonomialEntry,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by every library operation. The message is meant to
/// be shown verbatim to a user; `code()` is for programmatic dispatch.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qparikh
