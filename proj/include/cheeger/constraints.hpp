#pragma once

#include <vector>

#include "cheeger/geometry.hpp"

namespace cheeger {

// {x : normal . x <= offset}, |normal| = 1.
struct Halfplane {
  Point normal;
  double offset = 0.0;
};

struct Disk {
  Point center;
  double radius = 0.0;
};

// Support constraint of a boundary arc whose disk does not contain the whole
// body: {x : (x - center) . u(theta) <= radius for every theta in
// [from_angle, to_angle]}. The boundary is the arc plus its two end tangent
// half-lines. Needed to represent rounded bodies such as Cheeger sets, whose
// corner arcs are not disk constraints. Angular span must be in (0, pi].
struct ArcConstraint {
  Point center;
  double radius = 0.0;
  double from_angle = 0.0;
  double to_angle = 0.0;
};

// A convex body as an intersection of constraints. `reference_diameter` is
// the diameter of the body the spec was built from; erosion keeps it so
// tolerances stay anchored to the original scale.
struct ConstraintSpec {
  std::vector<Halfplane> halfplanes;
  std::vector<Disk> disks;
  std::vector<ArcConstraint> arcs;
  double reference_diameter = 0.0;

  std::size_t size() const { return halfplanes.size() + disks.size() + arcs.size(); }
  bool is_polygon() const { return disks.empty() && arcs.empty() && !halfplanes.empty(); }
};

// Largest violation of any constraint at x (<= 0 means inside).
double constraint_violation(const ConstraintSpec& spec, const Point& x);
bool satisfies(const ConstraintSpec& spec, const Point& x, double tol);

ConstraintSpec scale(const ConstraintSpec& spec, double factor);
ConstraintSpec rotate(const ConstraintSpec& spec, double angle);

Halfplane halfplane_through(const Point& a, const Point& b);  // interior on the left of a->b

}  // namespace cheeger
