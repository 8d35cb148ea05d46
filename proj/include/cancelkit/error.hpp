#pragma once

#include <stdexcept>
#include <string>

namespace cancelkit {

enum class ErrorCode {
  kInvalidArgument,
  kNotMonic,
  kReducible,
  kNotSquarefree,
  kUnsupportedDegree,
  kDivisionByZero,
  kZeroRadicand,
  kFieldMismatch,
  kFormViolation,
  kDegreeTooSmall,
  kDegenerateConic,
  kExplosion,
  kCertificateFailure,
  kInsufficientPoints,
  kSyntaxError,
  kUnknownSymbol,
  kDegreeLessThanTwo,
};

const char* to_string(ErrorCode code);

/// Every library failure carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cancelkit
