#pragma once

#include <stdexcept>
#include <string>

namespace eslab {

/// Every failure mode the library can report. CLI and tests dispatch on the
/// kind; the message carries the offending event names / line numbers.
enum class ErrorKind {
  // structure validation
  CycleInCovers,
  ConflictOnComparablePair,
  SelfConflict,
  UnknownEvent,
  DuplicateEvent,
  // graph algorithms
  InstanceTooLarge,
  NotAnAntichain,
  NotChordal,
  // domain
  DomainTooLarge,
  NotConcurrent,
  MissingEdge,
  // labelling
  PartialLabelling,
  NotATree,
  NotAForest,
  DegreeTooHigh,
  InternalContradiction,
  NotSimple,
  GreedyAssertionFailed,
  UnexpectedOddCycle,
  NotStratifying,
  InvalidPartition,
  ImproperClassColoring,
  ImproperQuotientColoring,
  // generation
  GenerationBudgetExceeded,
  // text format
  SyntaxError,
  UnknownEventRef,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace eslab
