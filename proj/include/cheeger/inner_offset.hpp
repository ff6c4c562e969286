#pragma once

#include <optional>
#include <vector>

#include "cheeger/constraints.hpp"
#include "cheeger/geometry.hpp"

namespace cheeger {

// Drops duplicate constraints and constraints whose boundary does not
// contribute a piece of positive length (distance threshold 1e-12 x
// diameter). Throws EmptyBody when nothing remains, InvalidInput when the
// intersection is unbounded or a constraint is malformed.
ConstraintSpec normalize(ConstraintSpec spec);

// Counter-clockwise boundary of the intersection body. Pieces are chained by
// endpoint and the chain starts at the piece with the smallest outward
// normal angle in [0, 2pi).
BoundaryChain extract_boundary(const ConstraintSpec& spec);

// Closure of the inner parallel set at distance t: halfplanes move in by t,
// disk and arc radii shrink by t. Returns nullopt when the result is empty
// or thinner than the degeneracy tolerance.
std::optional<ConstraintSpec> erode(const ConstraintSpec& spec, double t);

// Constraint form of a convex chain: segments become halfplanes, arcs whose
// disk contains the body become disks, the remaining arcs arc constraints.
ConstraintSpec spec_from_chain(const BoundaryChain& chain);

struct InradiusResult {
  double r = 0.0;
  Point witness;  // centroid of the last non-empty erosion
};

// Bisection on the emptiness of erode(spec, t), to 1e-12 x diameter.
InradiusResult inradius(const ConstraintSpec& spec);

// A(t_start + tau) = area - perimeter*tau + corner_sum*tau^2 on
// [t_start, t_end], where corner_sum = sum of cot(theta_i/2) over the
// interior angles of `polygon`.
struct OffsetInterval {
  double t_start = 0.0;
  double t_end = 0.0;
  std::vector<Point> polygon;
  double area = 0.0;
  double perimeter = 0.0;
  double corner_sum = 0.0;

  double area_at(double t) const {
    const double tau = t - t_start;
    return area - perimeter * tau + corner_sum * tau * tau;
  }
};

struct OffsetSchedule {
  std::vector<OffsetInterval> intervals;  // breakpoints are edge-collapse times

  double inradius() const { return intervals.empty() ? 0.0 : intervals.back().t_end; }
  std::vector<double> breakpoints() const;
  double area_at(double t) const;
};

// Exact piecewise-quadratic area of the inner parallel sets of a convex
// polygon. Throws InvalidInput for chains with arcs.
OffsetSchedule polygon_offset_schedule(const BoundaryChain& polygon);

// A(inner parallel set at distance t); 0 once the set is empty. Polygons go
// through the offset schedule, everything else through erosion.
double offset_area(const ConstraintSpec& spec, double t);
double offset_area_by_erosion(const ConstraintSpec& spec, double t);

// Tolerance scale of a spec: its reference diameter, or a bound derived from
// the constraints when no reference is set.
double spec_scale(const ConstraintSpec& spec);

}  // namespace cheeger
