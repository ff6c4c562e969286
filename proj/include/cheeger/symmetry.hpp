#pragma once

#include <optional>
#include <vector>

#include "cheeger/geometry.hpp"

namespace cheeger {

struct RotationalSymmetry {
  int k = 0;
  Point center;
  double residual = 0.0;  // Hausdorff gap between the rotated and original boundary
  bool accepted = false;

  double angle() const { return kTwoPi / k; }
};

// A point of the boundary located by piece index and parameter.
struct ChainPosition {
  int piece = 0;
  double u = 0.0;
};

struct DotsEdges {
  double circumradius = 0.0;
  std::vector<Point> dots;                 // x_1..x_k, counter-clockwise
  std::vector<ChainPosition> positions;    // where each dot sits on the chain
  std::vector<BoundaryChain> edges;        // edges[i] runs from dots[i] to dots[i+1]
};

struct EdgeContact {
  int edge = 0;
  bool touched = false;
  std::optional<Point> witness;
};

struct RegularityReport {
  std::vector<EdgeContact> edges;
  bool cheeger_regular = false;
  double rotation_inheritance_gap = 0.0;
};

// Symmetric Hausdorff distance between two boundary curves. Each piece is
// sampled densely and every sampled local maximum is refined by golden
// section search.
double hausdorff_distance(const BoundaryChain& a, const BoundaryChain& b);

// Rotation by 2pi/k about the centroid; accepted iff the residual is <= tol.
RotationalSymmetry detect_symmetry(const BoundaryChain& chain, int k, double tol);

// Circumradius, dots and edges. The first dot is the farthest boundary point
// with the smallest polar angle about the center, unless one is given.
DotsEdges dots_and_edges(const BoundaryChain& chain, const RotationalSymmetry& sym);
DotsEdges dots_and_edges(const BoundaryChain& chain, const RotationalSymmetry& sym,
                         const Point& first_dot);

// An edge is touched when a sample of some boundary-contact piece of the
// Cheeger set lies within tol of it. Samples are taken from the middle of
// each contact piece outward, so witnesses sit as centrally as possible.
RegularityReport check_edge_contacts(const DotsEdges& de, const BoundaryChain& cheeger,
                                     const std::vector<int>& contact_pieces, double tol);

// Hausdorff gap between the Cheeger set and its rotation by 2pi/k.
double check_rotation_inheritance(const BoundaryChain& cheeger, const RotationalSymmetry& sym);

// Parameter of the point of the piece closest to x.
double locate_on_piece(const Piece& p, const Point& x);

}  // namespace cheeger
