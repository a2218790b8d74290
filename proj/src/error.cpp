#include "inscriber/error.hpp"

namespace inscriber {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DegenerateSimplex: return "DegenerateSimplex";
    case Errc::CenterInversion: return "CenterInversion";
    case Errc::NorthPole: return "NorthPole";
    case Errc::NotOnSphere: return "NotOnSphere";
    case Errc::EmptyIntersection: return "EmptyIntersection";
    case Errc::DegenerateFacet: return "DegenerateFacet";
    case Errc::NonManifoldRidge: return "NonManifoldRidge";
    case Errc::DanglingVertex: return "DanglingVertex";
    case Errc::OverlappingFacets: return "OverlappingFacets";
    case Errc::NonConvexSupport: return "NonConvexSupport";
    case Errc::NotInterior: return "NotInterior";
    case Errc::UnknownFacet: return "UnknownFacet";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotSimpleInterior: return "NotSimpleInterior";
    case Errc::DegeneratePointSet: return "DegeneratePointSet";
    case Errc::EmptyTree: return "EmptyTree";
    case Errc::InvalidTree: return "InvalidTree";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::InvalidPlan: return "InvalidPlan";
    case Errc::NotStacked: return "NotStacked";
    case Errc::BadDimension: return "BadDimension";
    case Errc::DegenerateNormals: return "DegenerateNormals";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::PlanNotBuildable: return "PlanNotBuildable";
    case Errc::NotDelaunay: return "NotDelaunay";
    case Errc::SupportNotSimplex: return "SupportNotSimplex";
    case Errc::BadInput: return "BadInput";
    case Errc::WrongCombinatorialType: return "WrongCombinatorialType";
    case Errc::InversionCenterHit: return "InversionCenterHit";
    case Errc::BadParameters: return "BadParameters";
    case Errc::GrowthCapExceeded: return "GrowthCapExceeded";
    case Errc::NonDistinctParams: return "NonDistinctParams";
    case Errc::OddDimension: return "OddDimension";
    case Errc::ParseError: return "ParseError";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::NotObstructed: return "NotObstructed";
  }
  return "Unknown";
}

}  // namespace inscriber
