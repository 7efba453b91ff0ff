#pragma once

#include <stdexcept>
#include <string>

namespace dryreach {

// Every failure the engine can signal deliberately. Tests match on the code,
// messages are for humans.
enum class ErrorCode {
  // graph construction / queries
  CycleDetected,
  EmptyEdgeInterval,
  UnknownModeReference,
  MissingInitialOrTerminalVertex,
  NonUniqueEndpoints,
  LabelMismatch,
  ExplosionGuard,
  // simulation
  UnknownMode,
  NonMonotonicTimes,
  NumericOverflow,
  SchemaError,
  DimensionMismatch,
  // discrepancy learning
  DomainError,
  EmptySampleSet,
  InsufficientTraces,
  DegenerateInitialStates,
  // reachability
  WindowOutOfRange,
  DurationExceedsDiscrepancyHorizon,
  RefusesEmptyGraph,
  UnknownJunction,
  // scenario / cli
  ScenarioError,
  BadDimension,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::EmptyEdgeInterval: return "EmptyEdgeInterval";
    case ErrorCode::UnknownModeReference: return "UnknownModeReference";
    case ErrorCode::MissingInitialOrTerminalVertex: return "MissingInitialOrTerminalVertex";
    case ErrorCode::NonUniqueEndpoints: return "NonUniqueEndpoints";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::UnknownMode: return "UnknownMode";
    case ErrorCode::NonMonotonicTimes: return "NonMonotonicTimes";
    case ErrorCode::NumericOverflow: return "NumericOverflow";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EmptySampleSet: return "EmptySampleSet";
    case ErrorCode::InsufficientTraces: return "InsufficientTraces";
    case ErrorCode::DegenerateInitialStates: return "DegenerateInitialStates";
    case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorCode::DurationExceedsDiscrepancyHorizon: return "DurationExceedsDiscrepancyHorizon";
    case ErrorCode::RefusesEmptyGraph: return "RefusesEmptyGraph";
    case ErrorCode::UnknownJunction: return "UnknownJunction";
    case ErrorCode::ScenarioError: return "ScenarioError";
    case ErrorCode::BadDimension: return "BadDimension";
  }
  return "Error";
}

}  // namespace dryreach
