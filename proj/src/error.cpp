#include "harmcov/error.hpp"

namespace harmcov {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotHarmonic: return "NotHarmonic";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotFaithful: return "NotFaithful";
    case ErrorCode::kNotSubgroup: return "NotSubgroup";
    case ErrorCode::kNotEtale: return "NotEtale";
    case ErrorCode::kFlipped: return "Flipped";
    case ErrorCode::kNotGenerating: return "NotGenerating";
    case ErrorCode::kNoLift: return "NoLift";
    case ErrorCode::kBaseMismatch: return "BaseMismatch";
    case ErrorCode::kGroupMismatch: return "GroupMismatch";
    case ErrorCode::kNotSurjective: return "NotSurjective";
    case ErrorCode::kSectionInvalid: return "SectionInvalid";
    case ErrorCode::kInertiaMismatch: return "InertiaMismatch";
    case ErrorCode::kWrongGammaCount: return "WrongGammaCount";
    case ErrorCode::kLocalNotPointCover: return "LocalNotPointCover";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace harmcov
