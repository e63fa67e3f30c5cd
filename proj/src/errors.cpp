#include "qparikh/errors.hpp"

namespace qparikh {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownCharacter: return "UnknownCharacter";
    case ErrorCode::EmptyPeriod: return "EmptyPeriod";
    case ErrorCode::DegreeExceeded: return "DegreeExceeded";
    case ErrorCode::NotUnitriangular: return "NotUnitriangular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooManyOccurrences: return "TooManyOccurrences";
    case ErrorCode::ErasingMorphism: return "ErasingMorphism";
    case ErrorCode::EmptyInducingWord: return "EmptyInducingWord";
    case ErrorCode::AdjacentRepeatedLetter: return "AdjacentRepeatedLetter";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::LetterAbsent: return "LetterAbsent";
    case ErrorCode::AllZeroClass: return "AllZeroClass";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NonMonomialEntry: return "NonMonomialEntry";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace qparikh
