#include "cheeger/geometry.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cheeger/errors.hpp"

namespace cheeger {
namespace {

constexpr double kAngleTol = 1e-12;

bool angle_in_arc(const Arc& a, double phi, double tol = kAngleTol) {
  const double d = wrap_angle(phi - a.start_angle);
  return d <= a.extent() + tol || d >= kTwoPi - tol;
}

// Integrals of x dy - y dx, x^2 dy and y^2 dx along one piece; the chain
// sums give twice the area and the first moments.
struct PieceMoments {
  double twice_area = 0.0;
  double mx = 0.0;  // integral of x^2/2 dy
  double my = 0.0;  // -integral of y^2/2 dx
};

PieceMoments moments(const Piece& piece) {
  PieceMoments m;
  if (const auto* s = std::get_if<Segment>(&piece)) {
    const Point& a = s->start;
    const Point& b = s->end;
    m.twice_area = a.x * b.y - b.x * a.y;
    m.mx = (b.y - a.y) * (a.x * a.x + a.x * b.x + b.x * b.x) / 6.0;
    m.my = -(b.x - a.x) * (a.y * a.y + a.y * b.y + b.y * b.y) / 6.0;
    return m;
  }
  const auto& arc = std::get<Arc>(piece);
  const double r = arc.radius;
  const double cx = arc.center.x;
  const double cy = arc.center.y;
  const double t0 = arc.start_angle;
  const double t1 = arc.end_angle;
  const double s0 = std::sin(t0), s1 = std::sin(t1);
  const double c0 = std::cos(t0), c1 = std::cos(t1);
  m.twice_area = r * r * (t1 - t0) + r * cx * (s1 - s0) - r * cy * (c1 - c0);

  auto fx = [&](double t, double s, double c) {
    return cx * cx * s + 2.0 * cx * r * (t / 2.0 + s * c / 2.0) + r * r * (s - s * s * s / 3.0);
  };
  auto fy = [&](double t, double s, double c) {
    return -cy * cy * c + 2.0 * cy * r * (t / 2.0 - s * c / 2.0) + r * r * (-c + c * c * c / 3.0);
  };
  m.mx = 0.5 * r * (fx(t1, s1, c1) - fx(t0, s0, c0));
  m.my = 0.5 * r * (fy(t1, s1, c1) - fy(t0, s0, c0));
  return m;
}

// Distance along the ray origin + lambda*dir to the piece, or -1 when the
// ray misses it.
double ray_hit(const Piece& piece, const Point& origin, const Point& dir) {
  if (const auto* s = std::get_if<Segment>(&piece)) {
    const Point e = s->end - s->start;
    const double den = cross(dir, e);
    if (std::abs(den) < 1e-300) return -1.0;
    const Point w = s->start - origin;
    const double lambda = cross(w, e) / den;
    const double mu = cross(w, dir) / den;
    if (mu < -1e-12 || mu > 1.0 + 1e-12 || lambda < 0.0) return -1.0;
    return lambda;
  }
  const auto& a = std::get<Arc>(piece);
  const Point w = origin - a.center;
  const double b = dot(dir, w);
  const double c = dot(w, w) - a.radius * a.radius;
  const double disc = b * b - c;
  if (disc < 0.0) return -1.0;
  const double sq = std::sqrt(disc);
  double best = -1.0;
  for (double lambda : {-b - sq, -b + sq}) {
    if (lambda < 0.0) continue;
    const Point q = origin + dir * lambda;
    if (angle_in_arc(a, polar_angle(q - a.center), 1e-10)) best = std::max(best, lambda);
  }
  return best;
}

}  // namespace

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

Point start_point(const Piece& p) { return point_at(p, 0.0); }
Point end_point(const Piece& p) { return point_at(p, 1.0); }

Point point_at(const Piece& p, double u) {
  if (const auto* s = std::get_if<Segment>(&p)) {
    if (u == 0.0) return s->start;
    if (u == 1.0) return s->end;
    return s->start + (s->end - s->start) * u;
  }
  const auto& a = std::get<Arc>(p);
  return a.center + unit_vector(a.start_angle + u * a.extent()) * a.radius;
}

Point tangent_at(const Piece& p, double u) {
  if (const auto* s = std::get_if<Segment>(&p)) {
    const Point e = s->end - s->start;
    return e * (1.0 / norm(e));
  }
  const auto& a = std::get<Arc>(p);
  return perp(unit_vector(a.start_angle + u * a.extent()));
}

Point outward_normal_at(const Piece& p, double u) {
  const Point t = tangent_at(p, u);
  return {t.y, -t.x};
}

double length(const Piece& p) {
  if (const auto* s = std::get_if<Segment>(&p)) return distance(s->start, s->end);
  const auto& a = std::get<Arc>(p);
  return a.radius * a.extent();
}

bool is_arc(const Piece& p) { return std::holds_alternative<Arc>(p); }

Point closest_point(const Piece& p, const Point& x) {
  if (const auto* s = std::get_if<Segment>(&p)) {
    const Point e = s->end - s->start;
    const double ee = dot(e, e);
    if (ee == 0.0) return s->start;
    const double u = std::clamp(dot(x - s->start, e) / ee, 0.0, 1.0);
    return s->start + e * u;
  }
  const auto& a = std::get<Arc>(p);
  const Point w = x - a.center;
  if (norm(w) == 0.0) return start_point(p);
  const double phi = polar_angle(w);
  if (angle_in_arc(a, phi, 0.0)) return a.center + unit_vector(phi) * a.radius;
  const Point s0 = start_point(p);
  const Point s1 = end_point(p);
  return distance(x, s0) <= distance(x, s1) ? s0 : s1;
}

double distance_to_piece(const Piece& p, const Point& x) {
  if (const auto* a = std::get_if<Arc>(&p)) {
    const Point w = x - a->center;
    const double rho = norm(w);
    if (rho > 0.0 && angle_in_arc(*a, polar_angle(w), 0.0)) return std::abs(rho - a->radius);
  }
  return distance(x, closest_point(p, x));
}

double farthest_distance(const Piece& p, const Point& x) {
  const double ends = std::max(distance(x, start_point(p)), distance(x, end_point(p)));
  if (const auto* a = std::get_if<Arc>(&p)) {
    const Point w = a->center - x;
    const double d = norm(w);
    if (d <= 1e-15 * a->radius) return a->radius;
    if (angle_in_arc(*a, polar_angle(w), 0.0)) return d + a->radius;
  }
  return ends;
}

Piece sub_piece(const Piece& p, double u0, double u1) {
  if (std::holds_alternative<Segment>(p)) return Segment{point_at(p, u0), point_at(p, u1)};
  Arc a = std::get<Arc>(p);
  const double ext = a.extent();
  const double s = a.start_angle;
  a.start_angle = s + u0 * ext;
  a.end_angle = s + u1 * ext;
  return a;
}

double signed_area(const BoundaryChain& chain) {
  double twice = 0.0;
  for (const auto& p : chain.pieces) twice += moments(p).twice_area;
  return 0.5 * twice;
}

double area(const BoundaryChain& chain) {
  require_valid(chain);
  return signed_area(chain);
}

double perimeter(const BoundaryChain& chain) {
  require_valid(chain);
  double total = 0.0;
  for (const auto& p : chain.pieces) total += length(p);
  return total;
}

Point centroid(const BoundaryChain& chain) {
  require_valid(chain);
  PieceMoments sum;
  for (const auto& p : chain.pieces) {
    const PieceMoments m = moments(p);
    sum.twice_area += m.twice_area;
    sum.mx += m.mx;
    sum.my += m.my;
  }
  const double a = 0.5 * sum.twice_area;
  if (!(a > 0.0)) throw InvalidInput("centroid of a body with zero area");
  return {sum.mx / a, sum.my / a};
}

double distance_to_pieces(const std::vector<Piece>& pieces, const Point& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pieces) best = std::min(best, distance_to_piece(p, x));
  return best;
}

double distance_to_boundary(const BoundaryChain& chain, const Point& x) {
  return distance_to_pieces(chain.pieces, x);
}

BoundingBox bounding_box(const BoundaryChain& chain) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  BoundingBox box{inf, inf, -inf, -inf};
  auto add = [&](const Point& q) {
    box.min_x = std::min(box.min_x, q.x);
    box.min_y = std::min(box.min_y, q.y);
    box.max_x = std::max(box.max_x, q.x);
    box.max_y = std::max(box.max_y, q.y);
  };
  for (const auto& p : chain.pieces) {
    add(start_point(p));
    add(end_point(p));
    if (const auto* a = std::get_if<Arc>(&p)) {
      for (int q = 0; q < 4; ++q) {
        const double phi = q * kPi / 2.0;
        if (angle_in_arc(*a, phi, 0.0)) add(a->center + unit_vector(phi) * a->radius);
      }
    }
  }
  return box;
}

double diameter(const BoundaryChain& chain) { return bounding_box(chain).diameter(); }

double positional_tolerance(const BoundaryChain& chain) { return 1e-9 * diameter(chain); }

bool contains(const BoundaryChain& chain, const Point& x, double tol) {
  const Point g = centroid(chain);
  const Point v = x - g;
  const double d = norm(v);
  if (d <= tol) return true;
  const Point dir = v * (1.0 / d);
  double reach = -1.0;
  for (const auto& p : chain.pieces) reach = std::max(reach, ray_hit(p, g, dir));
  if (reach < 0.0) return distance_to_boundary(chain, x) <= tol;
  return d <= reach + tol;
}

BoundaryChain rotate(const BoundaryChain& chain, double angle, const Point& about) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  auto rot = [&](const Point& q) {
    const Point w = q - about;
    return about + Point{c * w.x - s * w.y, s * w.x + c * w.y};
  };
  BoundaryChain out;
  out.pieces.reserve(chain.pieces.size());
  for (const auto& p : chain.pieces) {
    if (const auto* seg = std::get_if<Segment>(&p)) {
      out.pieces.emplace_back(Segment{rot(seg->start), rot(seg->end)});
    } else {
      Arc a = std::get<Arc>(p);
      a.center = rot(a.center);
      a.start_angle += angle;
      a.end_angle += angle;
      out.pieces.emplace_back(a);
    }
  }
  return out;
}

BoundaryChain scale(const BoundaryChain& chain, double factor) {
  if (!(factor > 0.0)) throw InvalidInput("scale factor must be positive");
  BoundaryChain out;
  for (const auto& p : chain.pieces) {
    if (const auto* seg = std::get_if<Segment>(&p)) {
      out.pieces.emplace_back(Segment{seg->start * factor, seg->end * factor});
    } else {
      Arc a = std::get<Arc>(p);
      a.center = a.center * factor;
      a.radius *= factor;
      out.pieces.emplace_back(a);
    }
  }
  return out;
}

BoundaryChain translate(const BoundaryChain& chain, const Point& offset) {
  BoundaryChain out;
  for (const auto& p : chain.pieces) {
    if (const auto* seg = std::get_if<Segment>(&p)) {
      out.pieces.emplace_back(Segment{seg->start + offset, seg->end + offset});
    } else {
      Arc a = std::get<Arc>(p);
      a.center = a.center + offset;
      out.pieces.emplace_back(a);
    }
  }
  return out;
}

std::string ChainDiagnostics::summary() const {
  if (issues.empty()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i].message;
  }
  return os.str();
}

ChainDiagnostics validate(const BoundaryChain& chain) {
  ChainDiagnostics diag;
  const auto n = static_cast<int>(chain.pieces.size());
  if (n == 0) {
    diag.issues.push_back({ChainIssue::Kind::kEmpty, -1, 0.0, "chain has no pieces"});
    return diag;
  }
  const double tol = positional_tolerance(chain);
  diag.tolerance = tol;
  auto fmt = [](const char* what, int i, double v) {
    std::ostringstream os;
    os.precision(6);
    os << what << " at piece " << i << " (" << v << ")";
    return os.str();
  };

  for (int i = 0; i < n; ++i) {
    const Piece& p = chain.pieces[i];
    if (const auto* a = std::get_if<Arc>(&p)) {
      const bool full_ok = n == 1 && std::abs(a->extent() - kTwoPi) <= 1e-12;
      if (!(a->radius > 0.0) || !(a->extent() > 0.0) || (a->extent() >= kTwoPi && !full_ok) ||
          a->extent() > kTwoPi + 1e-12) {
        diag.issues.push_back({ChainIssue::Kind::kBadPiece, i, a->extent(),
                               fmt("arc must have positive radius and extent in (0, 2pi)", i,
                                   a->extent())});
      }
    } else if (length(p) <= tol) {
      diag.issues.push_back({ChainIssue::Kind::kBadPiece, i, length(p),
                             fmt("segment of non-positive length", i, length(p))});
    }
  }
  if (!diag.issues.empty()) return diag;

  double turning = 0.0;
  for (int i = 0; i < n; ++i) {
    const Piece& cur = chain.pieces[i];
    const Piece& next = chain.pieces[(i + 1) % n];
    const double gap = distance(end_point(cur), start_point(next));
    if (gap > tol) {
      diag.issues.push_back(
          {ChainIssue::Kind::kClosureGap, (i + 1) % n, gap, fmt("closure gap", (i + 1) % n, gap)});
    }
    if (const auto* a = std::get_if<Arc>(&cur)) turning += a->extent();
    if (n == 1 && is_arc(cur)) continue;
    const Point t0 = tangent_at(cur, 1.0);
    const Point t1 = tangent_at(next, 0.0);
    const double turn = std::atan2(cross(t0, t1), dot(t0, t1));
    turning += turn;
    if (turn < -1e-9) {
      const Point v = start_point(next);
      std::ostringstream os;
      os.precision(9);
      os << "reflex vertex (convexity violation) at (" << v.x << ", " << v.y << "), start of piece "
         << (i + 1) % n << ", turn " << turn;
      diag.issues.push_back({ChainIssue::Kind::kConvexity, (i + 1) % n, turn, os.str()});
    }
  }
  if (signed_area(chain) <= 0.0) {
    diag.issues.push_back({ChainIssue::Kind::kOrientation, 0, signed_area(chain),
                           fmt("chain is not counter-clockwise", 0, signed_area(chain))});
  }
  if (diag.issues.empty() && std::abs(turning - kTwoPi) > 1e-7) {
    diag.issues.push_back(
        {ChainIssue::Kind::kTurning, 0, turning, fmt("total turning differs from 2pi", 0, turning)});
  }
  return diag;
}

void require_valid(const BoundaryChain& chain) {
  const ChainDiagnostics d = validate(chain);
  if (!d.valid()) throw InvalidInput("invalid boundary chain: " + d.summary());
}

BoundaryChain polygon_chain(const std::vector<Point>& vertices) {
  BoundaryChain chain;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    chain.pieces.emplace_back(Segment{vertices[i], vertices[(i + 1) % n]});
  }
  return chain;
}

bool is_polygon(const BoundaryChain& chain) {
  return !chain.pieces.empty() &&
         std::all_of(chain.pieces.begin(), chain.pieces.end(),
                     [](const Piece& p) { return std::holds_alternative<Segment>(p); });
}

std::vector<Point> polygon_vertices(const BoundaryChain& chain) {
  if (!is_polygon(chain)) throw InvalidInput("chain contains arcs; expected a polygon");
  std::vector<Point> v;
  v.reserve(chain.pieces.size());
  for (const auto& p : chain.pieces) v.push_back(std::get<Segment>(p).start);
  return v;
}

}  // namespace cheeger
