#pragma once

#include <map>
#include <string>
#include <vector>

#include "cheeger/constraints.hpp"
#include "cheeger/geometry.hpp"

namespace cheeger {

enum class ShapeKind {
  kDisk,
  kRegularPolygon,
  kRectangle,
  kReuleauxPolygon,
  kDiskCapRegularPolygon,
  kCutCornerTriangle,
  kStadium,
};

struct CatalogShape {
  ShapeKind kind;
  std::map<std::string, double> params;  // missing entries take defaults
};

// Both representations of one body. The chain is built analytically, the
// spec as constraints; the two are generated independently of each other.
struct CatalogBody {
  std::string name;
  std::map<std::string, double> params;  // resolved, including defaults
  BoundaryChain chain;
  ConstraintSpec spec;
  int symmetry_order = 0;  // natural k; 0 for the disk (every k)
};

// Shapes, parameters and defaults:
//
//   disk                      radius=1
//   regular_polygon           n=4, circumradius=1; vertex on the +x axis
//   rectangle                 w=2, h=1; axis-aligned
//   reuleaux_polygon          k=3 (odd), width=1; vertex on the +x axis
//   disk_cap_regular_polygon  k=3, radius=1, apothem=radius*(1+cos(pi/k))/2;
//                             unit disk cut by a regular k-gon whose sides
//                             have distance `apothem` from the center and
//                             whose vertices point along 2*pi*j/k
//   cut_corner_triangle       side=1, cut=0.2 in (0, 1/2); each corner of an
//                             equilateral triangle is cut at `cut*side`
//                             along both sides; rotated so that one hexagon
//                             vertex lies on the +x axis
//   stadium                   w=2, h=1, cap_radius=1.5; the strip |y| <= h/2
//                             capped on both ends by circular arcs of radius
//                             cap_radius through the corners of the w x h
//                             rectangle (cap_radius >= half the diagonal).
//                             Stand-in for a generic 2-fold symmetric body.
//
// All bodies are centered at the origin.
CatalogBody make_catalog(const CatalogShape& shape);
CatalogBody make_catalog(const std::string& name, const std::map<std::string, double>& params = {});

ShapeKind shape_kind_from_name(const std::string& name);
std::string shape_name(ShapeKind kind);
std::vector<std::string> catalog_names();
std::map<std::string, double> default_params(ShapeKind kind, const std::map<std::string, double>& given = {});

}  // namespace cheeger
