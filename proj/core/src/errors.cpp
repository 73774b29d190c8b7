#include "eslab/errors.hpp"

namespace eslab {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleInCovers: return "CycleInCovers";
    case ErrorKind::ConflictOnComparablePair: return "ConflictOnComparablePair";
    case ErrorKind::SelfConflict: return "SelfConflict";
    case ErrorKind::UnknownEvent: return "UnknownEvent";
    case ErrorKind::DuplicateEvent: return "DuplicateEvent";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::NotAnAntichain: return "NotAnAntichain";
    case ErrorKind::NotChordal: return "NotChordal";
    case ErrorKind::DomainTooLarge: return "DomainTooLarge";
    case ErrorKind::NotConcurrent: return "NotConcurrent";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::PartialLabelling: return "PartialLabelling";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::GreedyAssertionFailed: return "GreedyAssertionFailed";
    case ErrorKind::UnexpectedOddCycle: return "UnexpectedOddCycle";
    case ErrorKind::NotStratifying: return "NotStratifying";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::ImproperClassColoring: return "ImproperClassColoring";
    case ErrorKind::ImproperQuotientColoring: return "ImproperQuotientColoring";
    case ErrorKind::GenerationBudgetExceeded: return "GenerationBudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownEventRef: return "UnknownEventRef";
  }
  return "UnknownError";
}

}  // namespace eslab
