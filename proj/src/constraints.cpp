#include "cheeger/constraints.hpp"

#include <algorithm>
#include <limits>

#include "cheeger/errors.hpp"

namespace cheeger {

double constraint_violation(const ConstraintSpec& spec, const Point& x) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& h : spec.halfplanes) worst = std::max(worst, dot(h.normal, x) - h.offset);
  for (const auto& d : spec.disks) worst = std::max(worst, distance(x, d.center) - d.radius);
  for (const auto& a : spec.arcs) {
    const Point w = x - a.center;
    const double rho = norm(w);
    double support = 0.0;
    if (rho > 0.0) {
      const double phi = wrap_angle(polar_angle(w) - a.from_angle);
      const double span = a.to_angle - a.from_angle;
      if (phi <= span) {
        support = rho;
      } else {
        support = rho * std::max(std::cos(phi), std::cos(phi - span));
      }
    }
    worst = std::max(worst, support - a.radius);
  }
  return worst;
}

bool satisfies(const ConstraintSpec& spec, const Point& x, double tol) {
  return constraint_violation(spec, x) <= tol;
}

ConstraintSpec scale(const ConstraintSpec& spec, double factor) {
  if (!(factor > 0.0)) throw InvalidInput("scale factor must be positive");
  ConstraintSpec out = spec;
  for (auto& h : out.halfplanes) h.offset *= factor;
  for (auto& d : out.disks) {
    d.center = d.center * factor;
    d.radius *= factor;
  }
  for (auto& a : out.arcs) {
    a.center = a.center * factor;
    a.radius *= factor;
  }
  out.reference_diameter *= factor;
  return out;
}

ConstraintSpec rotate(const ConstraintSpec& spec, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  auto rot = [&](const Point& q) { return Point{c * q.x - s * q.y, s * q.x + c * q.y}; };
  ConstraintSpec out = spec;
  for (auto& h : out.halfplanes) h.normal = rot(h.normal);
  for (auto& d : out.disks) d.center = rot(d.center);
  for (auto& a : out.arcs) {
    a.center = rot(a.center);
    a.from_angle += angle;
    a.to_angle += angle;
  }
  return out;
}

Halfplane halfplane_through(const Point& a, const Point& b) {
  const Point e = b - a;
  const double len = norm(e);
  if (!(len > 0.0)) throw InvalidInput("halfplane through coincident points");
  const Point n{e.y / len, -e.x / len};
  return {n, dot(n, a)};
}

}  // namespace cheeger
