#pragma once

#include <vector>

#include "cheeger/constraints.hpp"
#include "cheeger/geometry.hpp"
#include "cheeger/inner_offset.hpp"

namespace cheeger {

struct SolverConfig {
  double root_tol = 1e-12;         // absolute, in s
  double containment_tol = 1e-9;   // relative to the body diameter
  int max_iters = 200;
};

enum class ContactKind { kBoundary, kInterior };

struct Contact {
  int piece = 0;  // index into the Cheeger set boundary
  ContactKind kind = ContactKind::kInterior;
};

struct CheegerResult {
  double s = 0.0;
  double h = 0.0;  // 1/s
  double area_omega = 0.0;
  ConstraintSpec spec;        // normalized input
  BoundaryChain omega;        // boundary of the body
  BoundaryChain inner_set;    // boundary of the inner parallel set at s
  BoundaryChain cheeger_set;  // boundary of inner_set + s*B
  std::vector<Contact> contacts;
};

// A(inner parallel set at t) - pi t^2. Strictly decreasing on (0, inradius).
double area_balance(const ConstraintSpec& spec, double t);

// Unique root of area_balance. Polygons use the closed-form root on the
// offset schedule; other bodies bisect.
double solve_s(const ConstraintSpec& spec, const SolverConfig& cfg = {});
double solve_s_bisection(const ConstraintSpec& spec, const SolverConfig& cfg = {});
double solve_s_schedule(const OffsetSchedule& schedule);

double cheeger_constant(const ConstraintSpec& spec, const SolverConfig& cfg = {});

// Minkowski sum of a convex chain and the disk of radius s: segments move
// out by s, arcs grow by s, every corner becomes an arc of radius s.
// Corners turning less than 1e-10 rad are welded.
BoundaryChain dilate(const BoundaryChain& inner, double s);

// inner parallel set at s, dilated by s. Throws InvalidInput unless
// 0 < s < inradius.
BoundaryChain build_cheeger_set(const ConstraintSpec& spec, double s);

// Labels every piece of the Cheeger set as lying on the body boundary
// (sampled one-sided Hausdorff distance <= tol) or interior. Throws
// ConsistencyError when the set leaks out of omega, when nothing touches the
// boundary, or when an interior piece is not an arc of radius s.
std::vector<Contact> classify_contacts(const BoundaryChain& omega, const BoundaryChain& cheeger,
                                       double s, double tol);

CheegerResult solve(const ConstraintSpec& spec, const SolverConfig& cfg = {});

// |P(C) s / A(C) - 1|.
double verify_ratio(const CheegerResult& result);

}  // namespace cheeger
