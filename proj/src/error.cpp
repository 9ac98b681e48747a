#include "gsh/error.hpp"

namespace gsh {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NearZeroConstantTerm: return "NearZeroConstantTerm";
    case ErrorCode::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorCode::NonUnitConstant: return "NonUnitConstant";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorCode::ZeroDivisorOnGrid: return "ZeroDivisorOnGrid";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace gsh
