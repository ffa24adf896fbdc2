#pragma once

#include <stdexcept>
#include <string>

namespace qkzlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegistryMismatch : Error { using Error::Error; };
struct NonUnitSubstitutionIntoLaurent : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct InexactDivision : Error { using Error::Error; };
struct NonUnitDenominator : Error { using Error::Error; };
struct SizeTooLargeForBruteForce : Error { using Error::Error; };
struct SequenceNotInFamily : Error { using Error::Error; };
struct SingularChangeOfBasis : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct NotInTauSubring : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };

}  // namespace qkzlab
