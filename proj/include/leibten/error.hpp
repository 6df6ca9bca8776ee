#ifndef LEIBTEN_ERROR_HPP
#define LEIBTEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace leibten {

enum class ErrorCode {
  ComplexNotComposable,
  SlotOutOfRange,
  SignatureMismatch,
  DimensionMismatch,
  InvalidInputData,
  InvalidRepresentation,
  SizeLimit,
  NotACocycle,
  NotCentral,
  NotASection,
  TruncationOverflow,
  NotHomogeneous,
  NotSquareZero,
  NotHomotopyET,
  NotAHomomorphism,
  SchemaError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = {})
      : std::runtime_error(message), code_(code), location_(std::move(location)) {}

  ErrorCode code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace leibten

#endif
