#include "cheeger/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "cheeger/errors.hpp"

namespace cheeger {
namespace {

constexpr int kMinSamples = 64;
constexpr int kEdgeSamples = 256;
constexpr double kGolden = 0.6180339887498949;

double golden_max(const Piece& p, const BoundaryChain& other, double lo, double hi) {
  auto f = [&](double u) { return distance_to_boundary(other, point_at(p, u)); };
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  return std::max({fc, fd, f(a), f(b)});
}

double directed_hausdorff(const BoundaryChain& a, const BoundaryChain& b) {
  const double diam = std::max(bounding_box(a).diameter(), 1e-300);
  double worst = 0.0;
  for (const auto& p : a.pieces) {
    const int n = std::max(kMinSamples, static_cast<int>(std::ceil(2048.0 * length(p) / diam)));
    std::vector<double> f(n + 1);
    for (int i = 0; i <= n; ++i) f[i] = distance_to_boundary(b, point_at(p, static_cast<double>(i) / n));
    for (int i = 0; i <= n; ++i) {
      worst = std::max(worst, f[i]);
      const bool left = i == 0 || f[i] >= f[i - 1];
      const bool right = i == n || f[i] >= f[i + 1];
      if (left && right && f[i] > 0.0) {
        const double lo = static_cast<double>(std::max(i - 1, 0)) / n;
        const double hi = static_cast<double>(std::min(i + 1, n)) / n;
        worst = std::max(worst, golden_max(p, b, lo, hi));
      }
    }
  }
  return worst;
}

// Farthest point of a piece from c, with the smallest polar angle when the
// maximum is attained on a continuum (an arc centered at c).
std::vector<Point> farthest_candidates(const Piece& p, const Point& c, double tol) {
  std::vector<Point> out{start_point(p), end_point(p)};
  if (const auto* a = std::get_if<Arc>(&p)) {
    const Point w = a->center - c;
    if (norm(w) <= tol) {
      // every point is a candidate: the one nearest to polar angle 0 about c
      const double rel = wrap_angle(-a->start_angle);
      if (rel <= a->extent()) out.push_back(a->center + Point{a->radius, 0.0});
    } else {
      const double phi = polar_angle(w);
      const double rel = wrap_angle(phi - a->start_angle);
      if (rel <= a->extent()) out.push_back(a->center + unit_vector(phi) * a->radius);
    }
  }
  return out;
}

ChainPosition locate(const BoundaryChain& chain, const Point& x) {
  ChainPosition best;
  double best_d = INFINITY;
  for (int i = 0; i < static_cast<int>(chain.pieces.size()); ++i) {
    const double d = distance_to_piece(chain.pieces[i], x);
    if (d < best_d) {
      best_d = d;
      best = {i, locate_on_piece(chain.pieces[i], x)};
    }
  }
  // A dot at the very end of a piece is the start of the next one.
  if (best.u >= 1.0 - 1e-14) best = {(best.piece + 1) % static_cast<int>(chain.pieces.size()), 0.0};
  return best;
}

BoundaryChain sub_chain(const BoundaryChain& chain, ChainPosition from, ChainPosition to,
                        double min_length) {
  const int n = static_cast<int>(chain.pieces.size());
  BoundaryChain out;
  auto add = [&](const Piece& p, double u0, double u1) {
    if (u1 <= u0) return;
    Piece q = sub_piece(p, u0, u1);
    if (length(q) > min_length) out.pieces.push_back(q);
  };
  if (from.piece == to.piece && from.u < to.u) {
    add(chain.pieces[from.piece], from.u, to.u);
    return out;
  }
  add(chain.pieces[from.piece], from.u, 1.0);
  for (int i = (from.piece + 1) % n; i != to.piece; i = (i + 1) % n) add(chain.pieces[i], 0.0, 1.0);
  add(chain.pieces[to.piece], 0.0, to.u);
  return out;
}

}  // namespace

double locate_on_piece(const Piece& p, const Point& x) {
  if (const auto* s = std::get_if<Segment>(&p)) {
    const Point e = s->end - s->start;
    const double ee = dot(e, e);
    return ee == 0.0 ? 0.0 : std::clamp(dot(x - s->start, e) / ee, 0.0, 1.0);
  }
  const auto& a = std::get<Arc>(p);
  const double rel = wrap_angle(polar_angle(x - a.center) - a.start_angle);
  if (rel <= a.extent()) return rel / a.extent();
  // outside the arc: nearer end
  return distance(x, start_point(p)) <= distance(x, end_point(p)) ? 0.0 : 1.0;
}

double hausdorff_distance(const BoundaryChain& a, const BoundaryChain& b) {
  if (a.pieces.empty() || b.pieces.empty()) throw InvalidInput("Hausdorff distance of an empty chain");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

RotationalSymmetry detect_symmetry(const BoundaryChain& chain, int k, double tol) {
  if (k < 2) throw InvalidInput("symmetry order must be at least 2");
  if (!(tol >= 0.0)) throw InvalidInput("symmetry tolerance must be nonnegative");
  require_valid(chain);
  RotationalSymmetry sym;
  sym.k = k;
  sym.center = centroid(chain);
  sym.residual = hausdorff_distance(rotate(chain, sym.angle(), sym.center), chain);
  sym.accepted = sym.residual <= tol;
  return sym;
}

DotsEdges dots_and_edges(const BoundaryChain& chain, const RotationalSymmetry& sym) {
  require_valid(chain);
  const double tol = positional_tolerance(chain);
  double r = 0.0;
  for (const auto& p : chain.pieces) r = std::max(r, farthest_distance(p, sym.center));
  Point first;
  double first_angle = INFINITY;
  for (const auto& p : chain.pieces) {
    for (const Point& x : farthest_candidates(p, sym.center, tol)) {
      if (distance(x, sym.center) < r - tol) continue;
      double phi = wrap_angle(polar_angle(x - sym.center));
      if (phi >= kTwoPi - 1e-12) phi = 0.0;
      if (phi < first_angle) {
        first_angle = phi;
        first = x;
      }
    }
  }
  return dots_and_edges(chain, sym, first);
}

DotsEdges dots_and_edges(const BoundaryChain& chain, const RotationalSymmetry& sym,
                         const Point& first_dot) {
  if (sym.k < 2) throw InvalidInput("symmetry order must be at least 2");
  require_valid(chain);
  DotsEdges de;
  for (const auto& p : chain.pieces) de.circumradius = std::max(de.circumradius, farthest_distance(p, sym.center));
  for (int i = 0; i < sym.k; ++i) {
    const double angle = sym.angle() * i;
    const Point d = first_dot - sym.center;
    const double c = std::cos(angle), s = std::sin(angle);
    de.dots.push_back(sym.center + Point{c * d.x - s * d.y, s * d.x + c * d.y});
  }
  for (const auto& d : de.dots) de.positions.push_back(locate(chain, d));

  const double min_length = 1e-14 * diameter(chain);
  for (int i = 0; i < sym.k; ++i) {
    const ChainPosition from = de.positions[i];
    const ChainPosition to = de.positions[(i + 1) % sym.k];
    de.edges.push_back(sub_chain(chain, from, to, min_length));
  }
  return de;
}

RegularityReport check_edge_contacts(const DotsEdges& de, const BoundaryChain& cheeger,
                                     const std::vector<int>& contact_pieces, double tol) {
  // Sample parameters ordered by distance from the middle of the piece.
  std::vector<double> order;
  order.push_back(0.5);
  for (int j = 1; j <= kEdgeSamples / 2; ++j) {
    const double off = static_cast<double>(j) / kEdgeSamples;
    order.push_back(0.5 + off);
    order.push_back(0.5 - off);
  }

  RegularityReport rep;
  rep.cheeger_regular = true;
  for (int e = 0; e < static_cast<int>(de.edges.size()); ++e) {
    EdgeContact ec;
    ec.edge = e;
    const auto& edge = de.edges[e].pieces;
    for (int idx : contact_pieces) {
      if (edge.empty()) break;
      const Piece& p = cheeger.pieces.at(idx);
      for (double u : order) {
        const Point x = point_at(p, u);
        if (distance_to_pieces(edge, x) <= tol) {
          ec.touched = true;
          ec.witness = x;
          break;
        }
      }
      if (ec.touched) break;
    }
    rep.cheeger_regular = rep.cheeger_regular && ec.touched;
    rep.edges.push_back(ec);
  }
  return rep;
}

double check_rotation_inheritance(const BoundaryChain& cheeger, const RotationalSymmetry& sym) {
  return hausdorff_distance(rotate(cheeger, sym.angle(), sym.center), cheeger);
}

}  // namespace cheeger
