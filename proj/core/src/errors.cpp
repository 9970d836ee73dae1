#include "ditkin/errors.hpp"

namespace ditkin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupportedOperandKind: return "UnsupportedOperandKind";
    case ErrorCode::kMissingTailBound: return "MissingTailBound";
    case ErrorCode::kNotInAlgebra: return "NotInAlgebra";
    case ErrorCode::kUndecidableMembership: return "UndecidableMembership";
    case ErrorCode::kNotInMInfinity: return "NotInMInfinity";
    case ErrorCode::kHorizonExhausted: return "HorizonExhausted";
    case ErrorCode::kInvalidExcludedSet: return "InvalidExcludedSet";
    case ErrorCode::kNotDivergent: return "NotDivergent";
  }
  return "Unknown";
}

}  // namespace ditkin
