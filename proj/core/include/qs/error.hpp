#ifndef QS_ERROR_HPP
#define QS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qs {

// Failure taxonomy for the whole library.  Every throw site names the
// violated precondition; the CLI maps kinds onto process exit codes.
enum class ErrorKind {
  NonMonicDivisor,
  UnknownVariable,
  ContextMismatch,
  DimensionMismatch,
  NotSplitPair,
  MiddleMismatch,
  NotIdempotent,
  SingularMatrix,
  NotRecognizedUnit,
  NotLocalAtPoint,
  DegreeBoundExhausted,
  ResidueMismatch,
  DenominatorInIdeal,
  MismatchedE,
  NotBezout,
  NotUnitTranslation,
  NonRationalLocus,
  UnsupportedDimension,
  NotUnimodular,
  ParseError,
  InvalidInput,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace qs

#endif  // QS_ERROR_HPP
