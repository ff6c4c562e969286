#include "cheeger/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cheeger/catalog.hpp"
#include "cheeger/errors.hpp"

namespace cheeger::io {
namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string("expected a number for ") + what);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidInput(std::string("non-finite value for ") + what);
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array");
  return a;
}

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
  // keep it a JSON float so re-parsing yields the same type
  if (!std::strpbrk(buf, ".e")) out += ".0";
}

void write(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent) * (depth + 1), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent) * depth, ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ',';
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += sep;
        write(out, it.value(), indent, depth + 1);
      }
      out += nl;
      out += close;
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // short arrays of numbers (points) stay on one line
      const bool flat = j.size() <= 2 && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
      out += '[';
      if (!flat) out += nl;
      bool first = true;
      for (const auto& e : j) {
        if (!first) {
          out += ',';
          if (flat && indent > 0) out += ' ';
          if (!flat) out += nl;
        }
        first = false;
        if (!flat) out += pad;
        write(out, e, indent, depth + 1);
      }
      if (!flat) {
        out += nl;
        out += close;
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

ConstraintSpec polygon_spec(const BoundaryChain& chain) {
  ConstraintSpec spec;
  for (const auto& p : chain.pieces) {
    const auto& s = std::get<Segment>(p);
    spec.halfplanes.push_back(halfplane_through(s.start, s.end));
  }
  spec.reference_diameter = diameter(chain);
  return spec;
}

Body parse_polygon(const Json& j) {
  std::vector<Point> v;
  for (const auto& e : array_field(j, "vertices")) v.push_back(parse_point(e));
  if (v.size() < 3) throw InvalidInput("a polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == v[(i + 1) % v.size()]) throw InvalidInput("polygon has repeated consecutive vertices");
  }
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  if (twice < 0.0) std::reverse(v.begin(), v.end());
  Body b;
  b.kind = "polygon";
  b.chain = polygon_chain(v);
  require_valid(*b.chain);
  b.spec = polygon_spec(*b.chain);
  return b;
}

Body parse_constraints(const Json& j) {
  Body b;
  b.kind = "constraints";
  if (j.contains("halfplanes")) {
    for (const auto& e : array_field(j, "halfplanes")) {
      Halfplane h{parse_point(field(e, "normal")), number(field(e, "offset"), "offset")};
      const double len = norm(h.normal);
      if (std::abs(len - 1.0) > 1e-9) throw InvalidInput("halfplane normals must have unit length");
      b.spec.halfplanes.push_back(h);
    }
  }
  if (j.contains("disks")) {
    for (const auto& e : array_field(j, "disks")) {
      b.spec.disks.push_back({parse_point(field(e, "center")), number(field(e, "radius"), "radius")});
    }
  }
  if (j.contains("arcs")) {
    for (const auto& e : array_field(j, "arcs")) {
      b.spec.arcs.push_back({parse_point(field(e, "center")), number(field(e, "radius"), "radius"),
                             number(field(e, "from_angle"), "from_angle"),
                             number(field(e, "to_angle"), "to_angle")});
    }
  }
  if (b.spec.size() == 0) throw InvalidInput("constraint body has no constraints");
  return b;
}

}  // namespace

Json point_json(const Point& p) { return Json::array({p.x, p.y}); }

Point parse_point(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("a point must be an [x, y] array");
  return {number(j[0], "x"), number(j[1], "y")};
}

Json piece_json(const Piece& p) {
  Json j;
  if (const auto* s = std::get_if<Segment>(&p)) {
    j["type"] = "segment";
    j["start"] = point_json(s->start);
    j["end"] = point_json(s->end);
  } else {
    const auto& a = std::get<Arc>(p);
    j["type"] = "arc";
    j["center"] = point_json(a.center);
    j["radius"] = a.radius;
    j["start_angle"] = a.start_angle;
    j["end_angle"] = a.end_angle;
  }
  return j;
}

Piece parse_piece(const Json& j) {
  const std::string type = field(j, "type").is_string() ? j.at("type").get<std::string>() : "";
  if (type == "segment") return Segment{parse_point(field(j, "start")), parse_point(field(j, "end"))};
  if (type == "arc") {
    return Arc{parse_point(field(j, "center")), number(field(j, "radius"), "radius"),
               number(field(j, "start_angle"), "start_angle"), number(field(j, "end_angle"), "end_angle")};
  }
  throw InvalidInput("piece type must be \"segment\" or \"arc\"");
}

Json chain_json(const BoundaryChain& chain) {
  Json a = Json::array();
  for (const auto& p : chain.pieces) a.push_back(piece_json(p));
  return a;
}

BoundaryChain parse_chain(const Json& j) {
  if (!j.is_array()) throw InvalidInput("a boundary must be an array of pieces");
  BoundaryChain c;
  for (const auto& e : j) c.pieces.push_back(parse_piece(e));
  require_valid(c);
  return c;
}

Json spec_json(const ConstraintSpec& spec) {
  Json j;
  j["kind"] = "constraints";
  j["halfplanes"] = Json::array();
  for (const auto& h : spec.halfplanes) {
    j["halfplanes"].push_back(Json{{"normal", point_json(h.normal)}, {"offset", h.offset}});
  }
  j["disks"] = Json::array();
  for (const auto& d : spec.disks) {
    j["disks"].push_back(Json{{"center", point_json(d.center)}, {"radius", d.radius}});
  }
  if (!spec.arcs.empty()) {
    j["arcs"] = Json::array();
    for (const auto& a : spec.arcs) {
      j["arcs"].push_back(Json{{"center", point_json(a.center)},
                               {"radius", a.radius},
                               {"from_angle", a.from_angle},
                               {"to_angle", a.to_angle}});
    }
  }
  return j;
}

Body catalog_body(const std::string& name, const std::map<std::string, double>& params) {
  CatalogBody c = make_catalog(name, params);
  Body b;
  b.kind = "catalog";
  b.name = c.name;
  b.spec = c.spec;
  b.chain = c.chain;
  return b;
}

Body parse_body(const Json& j) {
  if (!j.is_object()) throw InvalidInput("body JSON must be an object");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InvalidInput("field 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "polygon") return parse_polygon(j);
  if (k == "constraints") return parse_constraints(j);
  if (k == "catalog") {
    const Json& name = field(j, "name");
    if (!name.is_string()) throw InvalidInput("catalog name must be a string");
    std::map<std::string, double> params;
    if (j.contains("params")) {
      if (!j.at("params").is_object()) throw InvalidInput("catalog params must be an object");
      for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it) {
        params[it.key()] = number(it.value(), it.key().c_str());
      }
    }
    return catalog_body(name.get<std::string>(), params);
  }
  throw InvalidInput("unknown body kind '" + k + "'");
}

Body load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return parse_body(j);
}

Json result_json(const CheegerResult& r) {
  Json j;
  j["s"] = r.s;
  j["h"] = r.h;
  j["area_omega"] = r.area_omega;
  j["cheeger"] = Json{{"area", area(r.cheeger_set)},
                      {"perimeter", perimeter(r.cheeger_set)},
                      {"boundary", chain_json(r.cheeger_set)}};
  j["contacts"] = Json::array();
  for (const auto& c : r.contacts) {
    j["contacts"].push_back(
        Json{{"piece", c.piece}, {"kind", c.kind == ContactKind::kBoundary ? "boundary" : "interior"}});
  }
  j["inner_set"] = Json{{"area", area(r.inner_set)}, {"boundary", chain_json(r.inner_set)}};
  j["omega"] = Json{{"boundary", chain_json(r.omega)}};
  return j;
}

Json rejection_json(const RotationalSymmetry& sym) {
  Json j;
  j["k"] = sym.k;
  j["center"] = point_json(sym.center);
  j["accepted"] = false;
  j["residual"] = sym.residual;
  return j;
}

Json symmetry_json(const SymmetryRun& run) {
  Json j;
  j["k"] = run.sym.k;
  j["center"] = point_json(run.sym.center);
  j["accepted"] = run.sym.accepted;
  j["residual"] = run.sym.residual;
  j["circumradius"] = run.dots.circumradius;
  j["dots"] = Json::array();
  for (const auto& d : run.dots.dots) j["dots"].push_back(point_json(d));
  j["edges"] = Json::array();
  const int k = static_cast<int>(run.dots.edges.size());
  for (int i = 0; i < k; ++i) j["edges"].push_back(Json{{"from", i}, {"to", (i + 1) % k}});
  j["edge_contacts"] = Json::array();
  for (const auto& e : run.report.edges) {
    Json c{{"edge", e.edge}, {"touched", e.touched}};
    c["witness"] = e.witness ? point_json(*e.witness) : Json(nullptr);
    j["edge_contacts"].push_back(c);
  }
  j["cheeger_regular"] = run.report.cheeger_regular;
  j["rotation_gap"] = run.report.rotation_inheritance_gap;
  return j;
}

std::string dump(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

}  // namespace cheeger::io
