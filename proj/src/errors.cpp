#include "nichols/errors.hpp"

namespace nichols {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidChar: return "InvalidChar";
    case ErrorCode::TorsionDivisibleByP: return "TorsionDivisibleByP";
    case ErrorCode::NonCyclicTorsion: return "NonCyclicTorsion";
    case ErrorCode::BadRelation: return "BadRelation";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AssignmentViolatesRelations: return "AssignmentViolatesRelations";
    case ErrorCode::NotIFinite: return "NotIFinite";
    case ErrorCode::CaseExhaustion: return "CaseExhaustion";
    case ErrorCode::NotAdmitsAllReflections: return "NotAdmitsAllReflections";
    case ErrorCode::PointLimitExceeded: return "PointLimitExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::UnsupportedChar: return "UnsupportedChar";
    case ErrorCode::DecomposableInput: return "DecomposableInput";
    case ErrorCode::InternalTableMismatch: return "InternalTableMismatch";
    case ErrorCode::TableDataError: return "TableDataError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "InternalError";
}

}  // namespace nichols
