#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "cheeger/cheeger_solver.hpp"
#include "cheeger/constraints.hpp"
#include "cheeger/geometry.hpp"
#include "cheeger/symmetry.hpp"

namespace cheeger::io {

using Json = nlohmann::ordered_json;

// A body as read from JSON. `chain` is set for polygon and catalog input,
// where a boundary is known independently of the constraints.
struct Body {
  std::string kind;  // "polygon", "constraints" or "catalog"
  std::string name;  // catalog shape name
  ConstraintSpec spec;
  std::optional<BoundaryChain> chain;
};

// Body JSON:
//   {"kind":"polygon","vertices":[[x,y],...]}
//   {"kind":"constraints","halfplanes":[{"normal":[nx,ny],"offset":c},...],
//    "disks":[{"center":[cx,cy],"radius":r},...],
//    "arcs":[{"center":[cx,cy],"radius":r,"from_angle":a,"to_angle":b},...]}
//   {"kind":"catalog","name":"...","params":{...}}
// "arcs" is optional. Polygons may be given in either orientation but must
// be convex; the diagnostic for a reflex vertex names its coordinates.
Body parse_body(const Json& j);
Body load_body(const std::string& path);
Body catalog_body(const std::string& name, const std::map<std::string, double>& params);

Json point_json(const Point& p);
Point parse_point(const Json& j);
Json piece_json(const Piece& p);
Piece parse_piece(const Json& j);
Json chain_json(const BoundaryChain& chain);
BoundaryChain parse_chain(const Json& j);  // validates
Json spec_json(const ConstraintSpec& spec);

Json result_json(const CheegerResult& r);

struct SymmetryRun {
  RotationalSymmetry sym;
  DotsEdges dots;
  RegularityReport report;
};
Json rejection_json(const RotationalSymmetry& sym);
Json symmetry_json(const SymmetryRun& run);

// Deterministic serialization: keys in insertion order, floating point
// values with 17 significant digits, non-finite values as null.
std::string dump(const Json& j, int indent = 2);

}  // namespace cheeger::io
