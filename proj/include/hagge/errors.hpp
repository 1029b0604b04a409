#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hagge {

// Every precondition violation in the geometry layer maps to one of these
// codes so callers (and tests) can dispatch without string matching.
enum class ErrorCode {
  // scalars
  DivisionByZero,
  NotOddPrime,
  MixedModulus,
  InvalidScalar,
  // incidence layer
  ZeroVector,
  EqualPoints,
  EqualLines,
  NotCollinear,
  TooManyCoincident,
  // conics
  DuplicatePoints,
  DegeneratePosition,
  CollinearInput,
  WrongField,
  DegenerateConic,
  PointNotOnConic,
  PointNotOnLine,
  NotCommonPoints,
  IdenticalConics,
  TangentialContact,
  // involutions
  OverlappingPairs,
  NoInvolution,
  Underdetermined,
  DegenerateQuadrangle,
  LineThroughVertex,
  PointsNotOnConic,
  // point transformations
  PoleInput,
  PointAtInfinity,
  NotThroughPole,
  NotRationallyDiagonalizable,
  RepeatedEigenvalue,
  CollinearDEF,
  ZeroSeedEntry,
  ProportionalSeeds,
  NotSelfPolar,
  VertexInput,
  NotThroughVertex,
  ThroughTwoVertices,
  // scenes and verification
  InvalidScene,
  ExhaustedAttempts,
  // i/o
  NonRationalField,
  EmptyScene,
  InvalidDocument,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::MixedModulus: return "MixedModulus";
    case ErrorCode::InvalidScalar: return "InvalidScalar";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::EqualLines: return "EqualLines";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::TooManyCoincident: return "TooManyCoincident";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::DegeneratePosition: return "DegeneratePosition";
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::PointNotOnConic: return "PointNotOnConic";
    case ErrorCode::PointNotOnLine: return "PointNotOnLine";
    case ErrorCode::NotCommonPoints: return "NotCommonPoints";
    case ErrorCode::IdenticalConics: return "IdenticalConics";
    case ErrorCode::TangentialContact: return "TangentialContact";
    case ErrorCode::OverlappingPairs: return "OverlappingPairs";
    case ErrorCode::NoInvolution: return "NoInvolution";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::DegenerateQuadrangle: return "DegenerateQuadrangle";
    case ErrorCode::LineThroughVertex: return "LineThroughVertex";
    case ErrorCode::PointsNotOnConic: return "PointsNotOnConic";
    case ErrorCode::PoleInput: return "PoleInput";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::NotThroughPole: return "NotThroughPole";
    case ErrorCode::NotRationallyDiagonalizable: return "NotRationallyDiagonalizable";
    case ErrorCode::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorCode::CollinearDEF: return "CollinearDEF";
    case ErrorCode::ZeroSeedEntry: return "ZeroSeedEntry";
    case ErrorCode::ProportionalSeeds: return "ProportionalSeeds";
    case ErrorCode::NotSelfPolar: return "NotSelfPolar";
    case ErrorCode::VertexInput: return "VertexInput";
    case ErrorCode::NotThroughVertex: return "NotThroughVertex";
    case ErrorCode::ThroughTwoVertices: return "ThroughTwoVertices";
    case ErrorCode::InvalidScene: return "InvalidScene";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::NonRationalField: return "NonRationalField";
    case ErrorCode::EmptyScene: return "EmptyScene";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  explicit Error(ErrorCode code) : Error(code, "") {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A scene that cannot be carried through the construction (tangency,
// coincidences, vanished quadrangle, ...). Rejected and resampled by the
// fuzz driver; the slug feeds the per-reason rejection statistics.
class DegenerateScene : public std::runtime_error {
 public:
  explicit DegenerateScene(std::string reason)
      : std::runtime_error("DegenerateScene: " + reason),
        reason_(std::move(reason)) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

// A verified-false concurrency: always an implementation bug, never a valid
// outcome. Carries the counterexample serialized as JSON for debugging.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(std::string what_failed, std::string counterexample_json)
      : std::runtime_error("TheoremViolation: " + what_failed),
        counterexample_(std::move(counterexample_json)) {}
  const std::string& counterexample_json() const { return counterexample_; }

 private:
  std::string counterexample_;
};

}  // namespace hagge
