#include "polyred/error.hpp"

namespace polyred {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OddCharRequired: return "OddCharRequired";
    case ErrorKind::NoPair: return "NoPair";
    case ErrorKind::BadIdeal: return "BadIdeal";
    case ErrorKind::BadSymbol: return "BadSymbol";
    case ErrorKind::LabelViolation: return "LabelViolation";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::Char2Unsupported: return "Char2Unsupported";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::IsotropicRoot: return "IsotropicRoot";
    case ErrorKind::DiscriminantPrime: return "DiscriminantPrime";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::NotCGroup: return "NotCGroup";
    case ErrorKind::NotCorankOne: return "NotCorankOne";
    case ErrorKind::RelationFailure: return "RelationFailure";
  }
  return "Unknown";
}

}  // namespace polyred
