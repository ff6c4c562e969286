#include "cheeger/cheeger_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cheeger/errors.hpp"

namespace cheeger {
namespace {

constexpr int kContactSamples = 32;

// Upper end of the root bracket: half the smaller bounding-box extent is an
// upper bound on the inradius.
double bracket_top(const BoundaryChain& omega) {
  const BoundingBox box = bounding_box(omega);
  return 0.5 * std::min(box.max_x - box.min_x, box.max_y - box.min_y);
}

}  // namespace

double area_balance(const ConstraintSpec& spec, double t) {
  return offset_area(spec, t) - kPi * t * t;
}

double solve_s_bisection(const ConstraintSpec& spec, const SolverConfig& cfg) {
  if (!(cfg.root_tol > 0.0) || cfg.max_iters <= 0) throw InvalidInput("bad solver configuration");
  const ConstraintSpec body = normalize(spec);
  double lo = 0.0;
  double hi = bracket_top(extract_boundary(body));
  for (int it = 0; it < cfg.max_iters; ++it) {
    if (hi - lo <= cfg.root_tol) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    if (offset_area_by_erosion(body, mid) - kPi * mid * mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= cfg.root_tol) return 0.5 * (lo + hi);
  std::ostringstream os;
  os.precision(17);
  os << "root search exhausted " << cfg.max_iters << " iterations; bracket [" << lo << ", " << hi
     << "]";
  throw NumericFailure(os.str(), lo, hi);
}

double solve_s_schedule(const OffsetSchedule& schedule) {
  for (const auto& iv : schedule.intervals) {
    const double t0 = iv.t_start;
    const double t1 = iv.t_end;
    const double f0 = iv.area - kPi * t0 * t0;
    const double f1 = iv.area_at(t1) - kPi * t1 * t1;
    if (!(f0 > 0.0 && f1 <= 0.0)) continue;
    // (T - pi) tau^2 - (P + 2 pi t0) tau + (A - pi t0^2) = 0
    const double a = iv.corner_sum - kPi;
    const double b = -(iv.perimeter + 2.0 * kPi * t0);
    const double c = f0;
    double tau;
    if (std::abs(a) <= 1e-15 * std::abs(b)) {
      tau = -c / b;
    } else {
      const double disc = std::max(0.0, b * b - 4.0 * a * c);
      const double q = -0.5 * (b - std::sqrt(disc));  // b < 0, so no cancellation
      const double r1 = q / a;
      const double r2 = c / q;
      const double span = t1 - t0;
      auto inside = [&](double r) { return r >= -1e-12 * span && r <= span * (1.0 + 1e-12); };
      tau = inside(r2) ? r2 : r1;
    }
    return t0 + std::clamp(tau, 0.0, t1 - t0);
  }
  throw NumericFailure("area balance does not change sign on the offset schedule");
}

double solve_s(const ConstraintSpec& spec, const SolverConfig& cfg) {
  if (spec.is_polygon()) {
    const ConstraintSpec body = normalize(spec);
    return solve_s_schedule(polygon_offset_schedule(extract_boundary(body)));
  }
  return solve_s_bisection(spec, cfg);
}

double cheeger_constant(const ConstraintSpec& spec, const SolverConfig& cfg) {
  return 1.0 / solve_s(spec, cfg);
}

BoundaryChain dilate(const BoundaryChain& inner, double s) {
  if (!(s > 0.0)) throw InvalidInput("dilation radius must be positive");
  require_valid(inner);
  BoundaryChain out;
  const std::size_t n = inner.pieces.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Piece& p = inner.pieces[i];
    if (const auto* seg = std::get_if<Segment>(&p)) {
      const Point shift = outward_normal_at(p, 0.0) * s;
      out.pieces.emplace_back(Segment{seg->start + shift, seg->end + shift});
    } else {
      Arc a = std::get<Arc>(p);
      a.radius += s;
      out.pieces.emplace_back(a);
    }
    if (n == 1 && is_arc(p)) break;
    const Piece& next = inner.pieces[(i + 1) % n];
    const Point n0 = outward_normal_at(p, 1.0);
    const Point n1 = outward_normal_at(next, 0.0);
    const double turn = std::atan2(cross(n0, n1), dot(n0, n1));
    if (turn > 1e-10) {
      const Point corner = (end_point(p) + start_point(next)) * 0.5;
      const double a0 = polar_angle(n0);
      out.pieces.emplace_back(Arc{corner, s, a0, a0 + turn});
    }
  }
  return out;
}

BoundaryChain build_cheeger_set(const ConstraintSpec& spec, double s) {
  if (!(s > 0.0)) throw InvalidInput("Cheeger radius must be positive");
  const auto inner = erode(spec, s);
  if (!inner) throw InvalidInput("Cheeger radius is not below the inradius");
  return dilate(extract_boundary(*inner), s);
}

std::vector<Contact> classify_contacts(const BoundaryChain& omega, const BoundaryChain& cheeger,
                                       double s, double tol) {
  std::vector<Contact> out;
  bool touches = false;
  for (int i = 0; i < static_cast<int>(cheeger.pieces.size()); ++i) {
    const Piece& p = cheeger.pieces[i];
    double gap = 0.0;
    for (int j = 0; j <= kContactSamples; ++j) {
      const Point x = point_at(p, static_cast<double>(j) / kContactSamples);
      if (!contains(omega, x, tol)) {
        std::ostringstream os;
        os << "Cheeger set leaves the body at piece " << i << " (" << x.x << ", " << x.y << ")";
        throw ConsistencyError(os.str());
      }
      gap = std::max(gap, distance_to_boundary(omega, x));
    }
    if (gap <= tol) {
      out.push_back({i, ContactKind::kBoundary});
      touches = true;
      continue;
    }
    const auto* arc = std::get_if<Arc>(&p);
    if (!arc || std::abs(arc->radius - s) > tol) {
      std::ostringstream os;
      os << "interior piece " << i << " is not an arc of radius " << s;
      throw ConsistencyError(os.str());
    }
    out.push_back({i, ContactKind::kInterior});
  }
  if (!touches) throw ConsistencyError("Cheeger set does not touch the body boundary");
  return out;
}

CheegerResult solve(const ConstraintSpec& spec, const SolverConfig& cfg) {
  CheegerResult r;
  r.spec = normalize(spec);
  r.omega = extract_boundary(r.spec);
  r.area_omega = area(r.omega);
  r.s = solve_s(r.spec, cfg);
  r.h = 1.0 / r.s;
  const auto inner = erode(r.spec, r.s);
  if (!inner) throw NumericFailure("inner parallel set at the root is empty", r.s, r.s);
  r.inner_set = extract_boundary(*inner);
  r.cheeger_set = dilate(r.inner_set, r.s);
  r.contacts = classify_contacts(r.omega, r.cheeger_set, r.s, cfg.containment_tol * diameter(r.omega));
  return r;
}

double verify_ratio(const CheegerResult& result) {
  return std::abs(perimeter(result.cheeger_set) * result.s / area(result.cheeger_set) - 1.0);
}

}  // namespace cheeger
