#include "qs/error.hpp"

namespace qs {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSplitPair: return "NotSplitPair";
    case ErrorKind::MiddleMismatch: return "MiddleMismatch";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotRecognizedUnit: return "NotRecognizedUnit";
    case ErrorKind::NotLocalAtPoint: return "NotLocalAtPoint";
    case ErrorKind::DegreeBoundExhausted: return "DegreeBoundExhausted";
    case ErrorKind::ResidueMismatch: return "ResidueMismatch";
    case ErrorKind::DenominatorInIdeal: return "DenominatorInIdeal";
    case ErrorKind::MismatchedE: return "MismatchedE";
    case ErrorKind::NotBezout: return "NotBezout";
    case ErrorKind::NotUnitTranslation: return "NotUnitTranslation";
    case ErrorKind::NonRationalLocus: return "NonRationalLocus";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qs
