#include "cheeger/inner_offset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <variant>

#include "cheeger/errors.hpp"
#include "interval_set.hpp"

namespace cheeger {
namespace {

using detail::Intervals;
using Constraint = std::variant<Halfplane, Disk, ArcConstraint>;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tolerances {
  double scale = 1.0;
  double eps = 1e-12;      // pruning, tangency and piece-length threshold
  double closure = 1e-9;   // endpoint matching
};

Tolerances tolerances_for(double scale) {
  return {scale, 1e-12 * scale, 1e-9 * scale};
}

std::vector<Constraint> flatten(const ConstraintSpec& spec) {
  std::vector<Constraint> out;
  for (const auto& h : spec.halfplanes) out.emplace_back(h);
  for (const auto& d : spec.disks) out.emplace_back(d);
  for (const auto& a : spec.arcs) out.emplace_back(a);
  return out;
}

ConstraintSpec unflatten(const std::vector<Constraint>& cs, double reference_diameter) {
  ConstraintSpec spec;
  for (const auto& c : cs) {
    if (const auto* h = std::get_if<Halfplane>(&c)) spec.halfplanes.push_back(*h);
    if (const auto* d = std::get_if<Disk>(&c)) spec.disks.push_back(*d);
    if (const auto* a = std::get_if<ArcConstraint>(&c)) spec.arcs.push_back(*a);
  }
  spec.reference_diameter = reference_diameter;
  return spec;
}

// A line (p + u d, u in [lo, hi]) or a circle (center p, angle in [lo, hi])
// on which part of the body boundary may lie.
struct Carrier {
  bool line = true;
  Point p;
  Point d;
  double radius = 0.0;
  double lo = -kInf;
  double hi = kInf;
  int owner = -1;
};

// Range of the circle parameter used for wrapping: [lo, lo + 2pi].
Intervals wrapped(const Carrier& c, double s, double e) {
  const double base = c.lo;
  if (e - s >= kTwoPi) return {{base, base + kTwoPi}};
  const double s1 = base + wrap_angle(s - base);
  const double e1 = s1 + (e - s);
  if (e1 <= base + kTwoPi) return {{s1, e1}};
  return {{base, e1 - kTwoPi}, {s1, base + kTwoPi}};
}

Intervals full(const Carrier& c) {
  if (c.line) return {{-kInf, kInf}};
  return {{c.lo, c.lo + kTwoPi}};
}

Intervals in_halfplane(const Carrier& c, const Halfplane& h, const Tolerances& tol) {
  if (c.line) {
    const double a = dot(h.normal, c.d);
    const double b = dot(h.normal, c.p) - h.offset;
    if (std::abs(a) <= 1e-14) return b <= tol.eps ? full(c) : Intervals{};
    const double u0 = -b / a;
    return a > 0.0 ? Intervals{{-kInf, u0}} : Intervals{{u0, kInf}};
  }
  const double g = h.offset - dot(h.normal, c.p);
  if (g >= c.radius - tol.eps) return full(c);
  if (g <= -c.radius + tol.eps) return {};
  const double gamma = std::acos(std::clamp(g / c.radius, -1.0, 1.0));
  const double phi = polar_angle(h.normal);
  return wrapped(c, phi + gamma, phi + kTwoPi - gamma);
}

Intervals in_disk(const Carrier& c, const Disk& disk, const Tolerances& tol) {
  if (c.line) {
    const Point w = c.p - disk.center;
    const double foot = -dot(c.d, w);
    const double off = std::abs(cross(c.d, w));
    if (off >= disk.radius - tol.eps) return {};
    const double half = std::sqrt(disk.radius * disk.radius - off * off);
    return {{foot - half, foot + half}};
  }
  const Point delta = disk.center - c.p;
  const double d = norm(delta);
  const double big_r = c.radius;
  if (d + big_r <= disk.radius + tol.eps) return full(c);
  if (d >= big_r + disk.radius - tol.eps) return {};
  if (big_r >= d + disk.radius - tol.eps) return {};
  const double q = (big_r * big_r + d * d - disk.radius * disk.radius) / (2.0 * big_r * d);
  const double gamma = std::acos(std::clamp(q, -1.0, 1.0));
  const double phi = polar_angle(delta);
  return wrapped(c, phi - gamma, phi + gamma);
}

// (x - center) . u(theta) <= radius for all theta in the span: the two end
// tangent halfplanes, and inside the disk wherever x lies in the angular
// sector of the span.
Intervals in_arc_constraint(const Carrier& c, const ArcConstraint& a, const Tolerances& tol) {
  const Point ua = unit_vector(a.from_angle);
  const Point ub = unit_vector(a.to_angle);
  const Halfplane ha{ua, dot(ua, a.center) + a.radius};
  const Halfplane hb{ub, dot(ub, a.center) + a.radius};
  const Point na = -perp(ua);         // sector side: perp(ua).(x-c) >= 0
  const Point nb = -unit_vector(a.to_angle - kPi / 2.0);
  const Halfplane side_a{na, dot(na, a.center)};
  const Halfplane side_b{nb, dot(nb, a.center)};

  const Intervals dom = full(c);
  const double lo = dom.front().first;
  const double hi = dom.front().second;
  Intervals outside_sector =
      detail::unite(detail::complement(in_halfplane(c, side_a, tol), lo, hi),
                    detail::complement(in_halfplane(c, side_b, tol), lo, hi));
  const Intervals relaxed = detail::unite(in_disk(c, Disk{a.center, a.radius}, tol), outside_sector);
  return detail::intersect(detail::intersect(in_halfplane(c, ha, tol), in_halfplane(c, hb, tol)),
                           relaxed);
}

Intervals feasible(const Carrier& c, const Constraint& con, const Tolerances& tol) {
  Intervals out;
  if (const auto* h = std::get_if<Halfplane>(&con)) out = in_halfplane(c, *h, tol);
  if (const auto* d = std::get_if<Disk>(&con)) out = in_disk(c, *d, tol);
  if (const auto* a = std::get_if<ArcConstraint>(&con)) out = in_arc_constraint(c, *a, tol);
  return detail::canonical(std::move(out));
}

std::vector<Carrier> carriers_of(const Constraint& con, int owner) {
  std::vector<Carrier> out;
  if (const auto* h = std::get_if<Halfplane>(&con)) {
    Carrier c;
    c.p = h->normal * h->offset;
    c.d = perp(h->normal);
    c.owner = owner;
    out.push_back(c);
  } else if (const auto* d = std::get_if<Disk>(&con)) {
    Carrier c;
    c.line = false;
    c.p = d->center;
    c.radius = d->radius;
    c.lo = 0.0;
    c.hi = kTwoPi;
    c.owner = owner;
    out.push_back(c);
  } else {
    const auto& a = std::get<ArcConstraint>(con);
    Carrier before;
    before.p = a.center + unit_vector(a.from_angle) * a.radius;
    before.d = perp(unit_vector(a.from_angle));
    before.hi = 0.0;
    before.owner = owner;
    Carrier arc;
    arc.line = false;
    arc.p = a.center;
    arc.radius = a.radius;
    arc.lo = a.from_angle;
    arc.hi = a.to_angle;
    arc.owner = owner;
    Carrier after;
    after.p = a.center + unit_vector(a.to_angle) * a.radius;
    after.d = perp(unit_vector(a.to_angle));
    after.lo = 0.0;
    after.owner = owner;
    out = {before, arc, after};
  }
  return out;
}

struct OwnedPiece {
  Piece piece;
  int owner;
};

std::vector<OwnedPiece> boundary_pieces(const std::vector<Constraint>& cs, const Tolerances& tol) {
  std::vector<OwnedPiece> out;
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
    for (const Carrier& c : carriers_of(cs[i], i)) {
      Intervals set = detail::intersect(full(c), {{c.lo, c.hi}});
      for (int j = 0; j < static_cast<int>(cs.size()) && !set.empty(); ++j) {
        if (j != i) set = detail::intersect(set, feasible(c, cs[j], tol));
      }
      if (set.empty()) continue;
      if (c.line) {
        for (const auto& [u0, u1] : set) {
          if (u1 - u0 <= tol.eps) continue;
          if (!std::isfinite(u0) || !std::isfinite(u1)) {
            throw InvalidInput("constraint set is unbounded");
          }
          out.push_back({Segment{c.p + c.d * u0, c.p + c.d * u1}, i});
        }
        continue;
      }
      // Rejoin the piece split at the wrap point of a full circle.
      if (set.size() >= 2 && c.hi - c.lo >= kTwoPi && set.front().first <= c.lo &&
          set.back().second >= c.lo + kTwoPi) {
        set.back().second = set.front().second + kTwoPi;
        set.erase(set.begin());
      }
      for (const auto& [a0, a1] : set) {
        if ((a1 - a0) * c.radius <= tol.eps) continue;
        const double s = wrap_angle(a0);
        out.push_back({Arc{c.p, c.radius, s, s + std::min(a1 - a0, kTwoPi)}, i});
      }
    }
  }
  return out;
}

// Pieces produced by different constraints on the same line or circle (a
// halfplane and the tangent half-line of an arc constraint, say) describe the
// same boundary portion; merge overlapping ones.
bool try_merge(Piece& a, const Piece& b, const Tolerances& tol) {
  if (const auto* sa = std::get_if<Segment>(&a)) {
    const auto* sb = std::get_if<Segment>(&b);
    if (!sb) return false;
    const Point da = tangent_at(a, 0.0);
    const Point db = tangent_at(b, 0.0);
    if (std::abs(cross(da, db)) > 1e-9 || dot(da, db) <= 0.0) return false;
    if (std::abs(cross(da, sb->start - sa->start)) > 10.0 * tol.eps) return false;
    const double a1 = dot(sa->end - sa->start, da);
    const double b0 = dot(sb->start - sa->start, da);
    const double b1 = dot(sb->end - sa->start, da);
    if (b0 > a1 + tol.eps || b1 < -tol.eps) return false;
    const Point origin = sa->start;
    a = Segment{b0 < 0.0 ? sb->start : origin, b1 > a1 ? sb->end : sa->end};
    return true;
  }
  auto& aa = std::get<Arc>(a);
  const auto* ab = std::get_if<Arc>(&b);
  if (!ab) return false;
  if (distance(aa.center, ab->center) > 10.0 * tol.eps ||
      std::abs(aa.radius - ab->radius) > 10.0 * tol.eps) {
    return false;
  }
  const double slack = tol.eps / aa.radius;
  const double db = wrap_angle(ab->start_angle - aa.start_angle);
  if (db <= aa.extent() + slack) {
    aa.end_angle = aa.start_angle + std::min(kTwoPi, std::max(aa.extent(), db + ab->extent()));
    return true;
  }
  const double da = wrap_angle(aa.start_angle - ab->start_angle);
  if (da <= ab->extent() + slack) {
    const double ext = std::min(kTwoPi, std::max(ab->extent(), da + aa.extent()));
    aa.start_angle = ab->start_angle;
    aa.end_angle = ab->start_angle + ext;
    return true;
  }
  return false;
}

std::vector<Piece> merge_duplicates(std::vector<OwnedPiece> owned, const Tolerances& tol) {
  std::vector<Piece> pieces;
  for (auto& op : owned) pieces.push_back(op.piece);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pieces.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        if (try_merge(pieces[i], pieces[j], tol)) {
          pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
      }
    }
  }
  return pieces;
}

double start_normal_angle(const Piece& p) {
  const double a = wrap_angle(polar_angle(outward_normal_at(p, 0.0)));
  return a > kTwoPi - 1e-9 ? 0.0 : a;
}

BoundaryChain chain_pieces(std::vector<Piece> pieces, const Tolerances& tol) {
  BoundaryChain chain;
  if (pieces.size() == 1) {
    chain.pieces = std::move(pieces);
    return chain;
  }
  std::vector<bool> used(pieces.size(), false);
  std::vector<Piece> order{pieces[0]};
  used[0] = true;
  for (std::size_t step = 1; step < pieces.size(); ++step) {
    const Point tail = end_point(order.back());
    double best = kInf;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (used[i]) continue;
      const double gap = distance(tail, start_point(pieces[i]));
      if (gap < best) {
        best = gap;
        best_i = i;
      }
    }
    if (best > tol.closure) {
      std::ostringstream os;
      os << "boundary pieces do not close (gap " << best << " > tolerance " << tol.closure << ")";
      throw DegenerateBody(os.str());
    }
    used[best_i] = true;
    order.push_back(pieces[best_i]);
  }
  const double gap = distance(end_point(order.back()), start_point(order.front()));
  if (gap > tol.closure) {
    std::ostringstream os;
    os << "boundary pieces do not close (gap " << gap << " > tolerance " << tol.closure << ")";
    throw DegenerateBody(os.str());
  }

  // Start at the smallest outward normal angle; among ties, at the first one
  // in traversal order.
  const std::size_t n = order.size();
  std::size_t first = 0;
  double best = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = start_normal_angle(order[i]);
    if (a < best - 1e-12) {
      best = a;
      first = i;
    }
  }
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t prev = (first + n - 1) % n;
    if (std::abs(start_normal_angle(order[prev]) - best) > 1e-12) break;
    first = prev;
  }
  std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(first), order.end());
  chain.pieces = std::move(order);
  return chain;
}

std::vector<Constraint> dedupe(std::vector<Constraint> cs, const Tolerances& tol) {
  auto same = [&](const Constraint& a, const Constraint& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ha = std::get_if<Halfplane>(&a)) {
      const auto& hb = std::get<Halfplane>(b);
      return norm(ha->normal - hb.normal) <= 1e-12 && std::abs(ha->offset - hb.offset) <= tol.eps;
    }
    if (const auto* da = std::get_if<Disk>(&a)) {
      const auto& db = std::get<Disk>(b);
      return distance(da->center, db.center) <= tol.eps && std::abs(da->radius - db.radius) <= tol.eps;
    }
    const auto& aa = std::get<ArcConstraint>(a);
    const auto& ab = std::get<ArcConstraint>(b);
    return distance(aa.center, ab.center) <= tol.eps && std::abs(aa.radius - ab.radius) <= tol.eps &&
           std::abs(wrap_angle(aa.from_angle - ab.from_angle + 1.0) - 1.0) <= 1e-12 &&
           std::abs((aa.to_angle - aa.from_angle) - (ab.to_angle - ab.from_angle)) <= 1e-12;
  };
  std::vector<Constraint> out;
  for (auto& c : cs) {
    if (std::none_of(out.begin(), out.end(), [&](const Constraint& o) { return same(o, c); })) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

// Arc constraints whose radius has shrunk to nothing are the intersection of
// their end tangent halfplanes (span <= pi).
std::vector<Constraint> sanitize(const ConstraintSpec& spec, const Tolerances& tol) {
  std::vector<Constraint> out;
  for (auto c : flatten(spec)) {
    if (auto* h = std::get_if<Halfplane>(&c)) {
      const double len = norm(h->normal);
      if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(h->offset)) {
        throw InvalidInput("halfplane needs a finite non-zero normal");
      }
      h->normal = h->normal * (1.0 / len);
      h->offset /= len;
    } else if (auto* d = std::get_if<Disk>(&c)) {
      if (!(d->radius > 0.0) || !std::isfinite(d->radius)) {
        throw InvalidInput("disk radius must be positive");
      }
    } else {
      auto& a = std::get<ArcConstraint>(c);
      const double span = a.to_angle - a.from_angle;
      if (!(span > 0.0) || span > kPi + 1e-12) {
        throw InvalidInput("arc constraint span must lie in (0, pi]");
      }
      if (a.radius <= tol.eps) {
        const Point ua = unit_vector(a.from_angle);
        const Point ub = unit_vector(a.to_angle);
        out.emplace_back(Halfplane{ua, dot(ua, a.center) + a.radius});
        out.emplace_back(Halfplane{ub, dot(ub, a.center) + a.radius});
        continue;
      }
    }
    out.push_back(c);
  }
  return out;
}

struct Extraction {
  std::vector<Constraint> active;
  BoundaryChain chain;
};

Extraction extract(const ConstraintSpec& spec) {
  const Tolerances tol = tolerances_for(spec_scale(spec));
  std::vector<Constraint> cs = dedupe(sanitize(spec, tol), tol);
  if (cs.empty()) throw InvalidInput("constraint set is empty (unbounded body)");
  std::vector<OwnedPiece> owned = boundary_pieces(cs, tol);
  if (owned.empty()) throw EmptyBody("constraint intersection has empty interior");

  Extraction ex;
  std::vector<bool> active(cs.size(), false);
  for (const auto& op : owned) active[op.owner] = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (active[i]) ex.active.push_back(cs[i]);
  }
  ex.chain = chain_pieces(merge_duplicates(std::move(owned), tol), tol);
  const ChainDiagnostics diag = validate(ex.chain);
  if (!diag.valid()) throw DegenerateBody("extracted boundary is degenerate: " + diag.summary());
  const double a = signed_area(ex.chain);
  double p = 0.0;
  for (const auto& piece : ex.chain.pieces) p += length(piece);
  if (2.0 * a / p <= tol.eps) {
    std::ostringstream os;
    os << "body inradius below tolerance " << tol.eps;
    throw DegenerateBody(os.str());
  }
  return ex;
}

std::optional<Extraction> erode_extract(const ConstraintSpec& spec, double t) {
  if (!(t >= 0.0)) throw InvalidInput("erosion distance must be non-negative");
  const Tolerances tol = tolerances_for(spec_scale(spec));
  ConstraintSpec eroded = spec;
  eroded.reference_diameter = tol.scale;
  for (auto& h : eroded.halfplanes) h.offset -= t * norm(h.normal);
  for (auto& d : eroded.disks) {
    d.radius -= t;
    if (d.radius <= tol.eps) return std::nullopt;
  }
  for (auto& a : eroded.arcs) a.radius -= t;
  try {
    return extract(eroded);
  } catch (const EmptyBody&) {
    return std::nullopt;
  } catch (const DegenerateBody&) {
    return std::nullopt;
  }
}

}  // namespace

double spec_scale(const ConstraintSpec& spec) {
  if (spec.reference_diameter > 0.0) return spec.reference_diameter;
  double s = 0.0;
  for (const auto& h : spec.halfplanes) s = std::max(s, 2.0 * std::abs(h.offset) / norm(h.normal));
  for (const auto& d : spec.disks) s = std::max(s, 2.0 * (norm(d.center) + d.radius));
  for (const auto& a : spec.arcs) s = std::max(s, 2.0 * (norm(a.center) + a.radius));
  return s > 0.0 ? s : 1.0;
}

ConstraintSpec normalize(ConstraintSpec spec) {
  const Extraction ex = extract(spec);
  const double ref = spec.reference_diameter > 0.0 ? spec.reference_diameter : diameter(ex.chain);
  return unflatten(ex.active, ref);
}

BoundaryChain extract_boundary(const ConstraintSpec& spec) { return extract(spec).chain; }

std::optional<ConstraintSpec> erode(const ConstraintSpec& spec, double t) {
  auto ex = erode_extract(spec, t);
  if (!ex) return std::nullopt;
  return unflatten(ex->active, spec_scale(spec));
}

ConstraintSpec spec_from_chain(const BoundaryChain& chain) {
  require_valid(chain);
  const double diam = diameter(chain);
  ConstraintSpec spec;
  spec.reference_diameter = diam;
  for (const auto& piece : chain.pieces) {
    if (const auto* s = std::get_if<Segment>(&piece)) {
      spec.halfplanes.push_back(halfplane_through(s->start, s->end));
      continue;
    }
    const auto& a = std::get<Arc>(piece);
    double reach = 0.0;
    for (const auto& other : chain.pieces) reach = std::max(reach, farthest_distance(other, a.center));
    if (reach <= a.radius + 1e-12 * diam) {
      spec.disks.push_back({a.center, a.radius});
    } else if (a.extent() <= kPi + 1e-12) {
      spec.arcs.push_back({a.center, a.radius, a.start_angle, a.end_angle});
    } else {
      throw InvalidInput("arc spanning more than pi whose disk does not contain the body");
    }
  }
  return spec;
}

InradiusResult inradius(const ConstraintSpec& spec) {
  const Extraction base = extract(spec);
  const double scale = spec_scale(spec);
  const BoundingBox box = bounding_box(base.chain);
  double lo = 0.0;
  double hi = 0.5 * std::min(box.max_x - box.min_x, box.max_y - box.min_y) * (1.0 + 1e-9);
  InradiusResult res{0.0, centroid(base.chain)};
  while (hi - lo > 1e-12 * scale) {
    const double mid = 0.5 * (lo + hi);
    if (auto ex = erode_extract(spec, mid)) {
      lo = mid;
      res.witness = centroid(ex->chain);
    } else {
      hi = mid;
    }
  }
  // Thin erosions read as empty a little early; polygons have the exact
  // collapse time.
  res.r = spec.is_polygon() ? polygon_offset_schedule(base.chain).inradius() : lo;
  return res;
}

std::vector<double> OffsetSchedule::breakpoints() const {
  std::vector<double> out;
  for (const auto& iv : intervals) out.push_back(iv.t_start);
  if (!intervals.empty()) out.push_back(intervals.back().t_end);
  return out;
}

double OffsetSchedule::area_at(double t) const {
  if (intervals.empty() || t >= intervals.back().t_end) return 0.0;
  for (const auto& iv : intervals) {
    if (t <= iv.t_end) return std::max(0.0, iv.area_at(std::max(t, iv.t_start)));
  }
  return 0.0;
}

OffsetSchedule polygon_offset_schedule(const BoundaryChain& polygon) {
  require_valid(polygon);
  std::vector<Point> v = polygon_vertices(polygon);
  const double diam = diameter(polygon);
  const double len_tol = 1e-12 * diam;
  const double area0 = signed_area(polygon);

  OffsetSchedule sched;
  double t = 0.0;
  while (v.size() >= 3) {
    const std::size_t n = v.size();
    std::vector<Point> dir(n);   // edge i runs from v[i] to v[i+1]
    std::vector<double> len(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point e = v[(i + 1) % n] - v[i];
      len[i] = norm(e);
      dir[i] = e * (1.0 / len[i]);
    }
    // cot(interior/2) = tan(turn/2) = cross / (1 + dot) for unit directions.
    std::vector<double> corner(n);
    double corner_sum = 0.0;
    double perim = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& din = dir[(i + n - 1) % n];
      const Point& dout = dir[i];
      corner[i] = cross(din, dout) / (1.0 + dot(din, dout));
      corner_sum += corner[i];
      perim += len[i];
    }
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) a += cross(v[i], v[(i + 1) % n]);
    a *= 0.5;

    double tau = kInf;
    for (std::size_t i = 0; i < n; ++i) {
      const double rate = corner[i] + corner[(i + 1) % n];
      if (rate > 0.0) tau = std::min(tau, len[i] / rate);
    }
    if (!std::isfinite(tau)) throw ConsistencyError("polygon offset has no collapse event");

    OffsetInterval iv;
    iv.t_start = t;
    iv.t_end = t + tau;
    iv.polygon = v;
    iv.area = a;
    iv.perimeter = perim;
    iv.corner_sum = corner_sum;
    sched.intervals.push_back(iv);

    const double area_end = a - perim * tau + corner_sum * tau * tau;
    if (area_end <= 1e-12 * area0) break;

    // Move every vertex along its bisector and drop the collapsed edges.
    std::vector<Point> moved(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point nin = perp(dir[(i + n - 1) % n]);
      const Point nout = perp(dir[i]);
      moved[i] = v[i] + (nin + nout) * (tau / (1.0 + dot(nin, nout)));
    }
    std::vector<Point> next;
    for (std::size_t i = 0; i < n; ++i) {
      const double remaining = len[i] - (corner[i] + corner[(i + 1) % n]) * tau;
      if (remaining > len_tol) next.push_back(moved[(i + 1) % n]);
    }
    // next[j] is the end vertex of each surviving edge; rotate to keep the
    // original starting edge first when possible.
    if (!next.empty()) std::rotate(next.begin(), next.end() - 1, next.end());
    v = std::move(next);
    t += tau;
  }
  if (sched.intervals.empty()) throw InvalidInput("polygon has fewer than 3 vertices");
  return sched;
}

double offset_area_by_erosion(const ConstraintSpec& spec, double t) {
  auto ex = erode_extract(spec, t);
  return ex ? signed_area(ex->chain) : 0.0;
}

double offset_area(const ConstraintSpec& spec, double t) {
  if (!(t >= 0.0)) throw InvalidInput("offset distance must be non-negative");
  if (spec.is_polygon()) return polygon_offset_schedule(extract_boundary(spec)).area_at(t);
  return offset_area_by_erosion(spec, t);
}

}  // namespace cheeger
