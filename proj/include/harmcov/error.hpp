#ifndef HARMCOV_ERROR_HPP_
#define HARMCOV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace harmcov {

enum class ErrorCode {
  kDisconnectedGraph,
  kUnknownVertex,
  kNotHarmonic,
  kSizeLimitExceeded,
  kNotSymmetric,
  kNotFaithful,
  kNotSubgroup,
  kNotEtale,
  kFlipped,
  kNotGenerating,
  kNoLift,
  kBaseMismatch,
  kGroupMismatch,
  kNotSurjective,
  kSectionInvalid,
  kInertiaMismatch,
  kWrongGammaCount,
  kLocalNotPointCover,
  kInvalidInput,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception. `witness` names
// the offending vertex, edge, element or subgroup when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace harmcov

#endif  // HARMCOV_ERROR_HPP_
