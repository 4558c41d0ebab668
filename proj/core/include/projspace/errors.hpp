#pragma once

#include <stdexcept>
#include <string>

namespace projspace {

/// Machine-readable reason attached to every projspace error.
enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  UnsupportedOrder,
  MixedFields,
  ZeroInverse,
  MixedAmbient,
  AmbientTooLarge,
  EnumerationTooLarge,
  DomainError,
  MalformedCode,
  IndexOutOfRange,
  DependentBasis,
  WrongCount,
  FullSpaceAbsent,
  NotBasisDerived,
  DimensionMismatch,
  BadInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace projspace
