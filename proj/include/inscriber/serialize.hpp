#pragma once

// JSON documents for every exchanged object, exact "p/q" scalars throughout,
// plus the lossy OFF export. Field layouts are described in docs/formats.md.

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "inscriber/builder.hpp"
#include "inscriber/obstruction.hpp"
#include "inscriber/trees.hpp"

namespace inscriber {

using Json = nlohmann::ordered_json;

// Parses text, raising ParseError on malformed JSON.
Json parse_json(std::string_view text);
std::string dump(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const Json& j);

Json to_json(const Triangulation& t);
// Validates every triangulation invariant.
Triangulation triangulation_from_json(const Json& j);

Json to_json(const DualTree& t);
DualTree tree_from_json(const Json& j);

Json to_json(const RootedPlan& p, int d);
struct PlanDocument {
  int d;
  RootedPlan plan;
};
PlanDocument plan_from_json(const Json& j);

Json to_json(const InscribedPolytope& p);
InscribedPolytope polytope_from_json(const Json& j);

Json to_json(const BuildTrace& t);
BuildTrace trace_from_json(const Json& j);

Json to_json(const DelaunayReport& r);
Json to_json(const InscribedReport& r);
Json to_json(const AngleReport& r);
Json to_json(const CertifyReport& r);

// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

// p/q rounded half away from zero to `digits` decimals.
std::string decimal(const Scalar& s, int digits);

// OFF (nOFF for d != 3) with decimal coordinates. The header comment carries
// the hash of the exact polytope document.
std::string to_off(const InscribedPolytope& p, int digits);

}  // namespace inscriber
