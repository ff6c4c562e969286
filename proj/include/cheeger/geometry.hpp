#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

namespace cheeger {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  Point operator-() const { return {-x, -y}; }
  bool operator==(const Point&) const = default;
};

inline Point operator*(double s, const Point& p) { return p * s; }
inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double distance(const Point& a, const Point& b) { return norm(a - b); }
inline Point unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point perp(const Point& a) { return {-a.y, a.x}; }  // +90 degrees
inline double polar_angle(const Point& a) { return std::atan2(a.y, a.x); }

// Maps an angle into [0, 2*pi).
double wrap_angle(double a);

struct Segment {
  Point start;
  Point end;
};

// Circular arc traversed counter-clockwise from start_angle to end_angle.
// Angles are measured at the center; end_angle - start_angle is in (0, 2*pi].
struct Arc {
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;

  double extent() const { return end_angle - start_angle; }
};

using Piece = std::variant<Segment, Arc>;

struct BoundaryChain {
  std::vector<Piece> pieces;
};

// Per-piece geometry. The parameter u runs over [0, 1] along the piece.
Point start_point(const Piece& p);
Point end_point(const Piece& p);
Point point_at(const Piece& p, double u);
Point tangent_at(const Piece& p, double u);  // unit, direction of travel
Point outward_normal_at(const Piece& p, double u);
double length(const Piece& p);
Point closest_point(const Piece& p, const Point& x);
double distance_to_piece(const Piece& p, const Point& x);
// Largest distance from x to any point of the piece.
double farthest_distance(const Piece& p, const Point& x);
bool is_arc(const Piece& p);
// The same piece restricted to the parameter range [u0, u1].
Piece sub_piece(const Piece& p, double u0, double u1);

double area(const BoundaryChain& chain);
double signed_area(const BoundaryChain& chain);  // no validation
double perimeter(const BoundaryChain& chain);
Point centroid(const BoundaryChain& chain);
double distance_to_boundary(const BoundaryChain& chain, const Point& x);
double distance_to_pieces(const std::vector<Piece>& pieces, const Point& x);

struct BoundingBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double diameter() const { return std::hypot(max_x - min_x, max_y - min_y); }
};

BoundingBox bounding_box(const BoundaryChain& chain);
double diameter(const BoundaryChain& chain);

// Containment for convex chains: the ray from the centroid through x is
// compared against the boundary crossing on that ray.
bool contains(const BoundaryChain& chain, const Point& x, double tol);

BoundaryChain rotate(const BoundaryChain& chain, double angle, const Point& about);
BoundaryChain scale(const BoundaryChain& chain, double factor);
BoundaryChain translate(const BoundaryChain& chain, const Point& offset);

struct ChainIssue {
  enum class Kind { kEmpty, kBadPiece, kClosureGap, kOrientation, kConvexity, kTurning };
  Kind kind;
  int piece;  // index of the offending piece (or the piece after the junction)
  double magnitude;
  std::string message;
};

struct ChainDiagnostics {
  double tolerance = 0.0;
  std::vector<ChainIssue> issues;

  bool valid() const { return issues.empty(); }
  std::string summary() const;
};

ChainDiagnostics validate(const BoundaryChain& chain);
// Throws InvalidInput with the first issue when the chain is not a valid
// convex CCW body.
void require_valid(const BoundaryChain& chain);
// Positional tolerance used for closure/convexity checks: 1e-9 x bbox diameter.
double positional_tolerance(const BoundaryChain& chain);

// Closed CCW polygon through the given vertices.
BoundaryChain polygon_chain(const std::vector<Point>& vertices);
bool is_polygon(const BoundaryChain& chain);
std::vector<Point> polygon_vertices(const BoundaryChain& chain);

}  // namespace cheeger
