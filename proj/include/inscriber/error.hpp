#pragma once

#include <stdexcept>
#include <string>

namespace inscriber {

// Every failure raised by the library carries one of these codes. The C API
// maps them one-to-one onto insc_status values.
enum class Errc {
  DimensionMismatch,
  DegenerateSimplex,
  CenterInversion,
  NorthPole,
  NotOnSphere,
  EmptyIntersection,
  DegenerateFacet,
  NonManifoldRidge,
  DanglingVertex,
  OverlappingFacets,
  NonConvexSupport,
  NotInterior,
  UnknownFacet,
  UnknownVertex,
  NotSimpleInterior,
  DegeneratePointSet,
  EmptyTree,
  InvalidTree,
  UnknownNode,
  InvalidPlan,
  NotStacked,
  BadDimension,
  DegenerateNormals,
  SearchExhausted,
  PlanNotBuildable,
  NotDelaunay,
  SupportNotSimplex,
  BadInput,
  WrongCombinatorialType,
  InversionCenterHit,
  BadParameters,
  GrowthCapExceeded,
  NonDistinctParams,
  OddDimension,
  ParseError,
  VerificationFailed,
  HypothesisFailed,
  NotObstructed,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace inscriber
