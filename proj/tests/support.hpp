#pragma once

// Independent reference values for the tests. Nothing here calls into the
// library's geometry; closed forms are solved by hand and the radial
// quadrature works on raw constraint data.

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "cheeger/constraints.hpp"

namespace ref {

inline constexpr double pi = 3.14159265358979323846;

// Smaller root of a s^2 + b s + c = 0, computed without cancellation.
inline double small_root(double a, double b, double c) {
  const double q = -0.5 * (b + std::copysign(std::sqrt(b * b - 4.0 * a * c), b));
  const double r1 = q / a;
  const double r2 = c / q;
  return std::min(r1, r2) > 0.0 ? std::min(r1, r2) : std::max(r1, r2);
}

// a x b rectangle: (a - 2s)(b - 2s) = pi s^2.
inline double rectangle_s(double a, double b) { return small_root(4.0 - pi, -2.0 * (a + b), a * b); }

// unit square: (1 - 2s)^2 = pi s^2, so 1 - 2s = sqrt(pi) s.
inline double unit_square_s() { return 1.0 / (2.0 + std::sqrt(pi)); }

// Tangential polygon with area A and inradius r: inner parallel sets are
// similar copies, A(t) = A (1 - t/r)^2, so sqrt(A)(1 - s/r) = sqrt(pi) s.
inline double tangential_s(double area, double inradius) {
  return std::sqrt(area) / (std::sqrt(pi) + std::sqrt(area) / inradius);
}

// Second derivation for the same bodies: h = 1/r + sqrt(pi/A).
inline double tangential_h(double area, double inradius) { return 1.0 / inradius + std::sqrt(pi / area); }

inline double triangle_area(double side) { return std::sqrt(3.0) / 4.0 * side * side; }
inline double triangle_inradius(double side) { return side / (2.0 * std::sqrt(3.0)); }

// Regular n-gon with circumradius R.
inline double regular_area(int n, double R) { return 0.5 * n * R * R * std::sin(2.0 * pi / n); }
inline double regular_inradius(int n, double R) { return R * std::cos(pi / n); }

// Reuleaux triangle of width w: triangle plus three circular segments.
inline double reuleaux_triangle_area(double w) { return 0.5 * (pi - std::sqrt(3.0)) * w * w; }

// Exit distance of the ray c0 + rho u from one constraint.
inline double exit_halfplane(const cheeger::Halfplane& h, double x, double y, double ux, double uy) {
  const double nu = h.normal.x * ux + h.normal.y * uy;
  if (nu <= 0.0) return std::numeric_limits<double>::infinity();
  return (h.offset - h.normal.x * x - h.normal.y * y) / nu;
}

inline double exit_disk(const cheeger::Disk& d, double x, double y, double ux, double uy) {
  const double wx = x - d.center.x, wy = y - d.center.y;
  const double b = wx * ux + wy * uy;
  const double c = wx * wx + wy * wy - d.radius * d.radius;
  return -b + std::sqrt(b * b - c);
}

inline double radial_extent(const cheeger::ConstraintSpec& spec, double x, double y, double theta) {
  const double ux = std::cos(theta), uy = std::sin(theta);
  double rho = std::numeric_limits<double>::infinity();
  for (const auto& h : spec.halfplanes) rho = std::min(rho, exit_halfplane(h, x, y, ux, uy));
  for (const auto& d : spec.disks) rho = std::min(rho, exit_disk(d, x, y, ux, uy));
  return rho;
}

// Area = 1/2 int rho(theta)^2 dtheta about an interior point, by composite
// Simpson on n panels. Accurate to roughly 1e-8 relative for n = 2^16.
inline double radial_area(const cheeger::ConstraintSpec& spec, double x, double y, int n = 1 << 16) {
  const double h = 2.0 * pi / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double r = radial_extent(spec, x, y, i * h);
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * r * r;
  }
  return 0.5 * sum * h / 3.0;
}

struct SymmetricBody {
  std::string name;
  std::map<std::string, double> params;
  int k;
};

// Bodies of the edge-contact and symmetry-inheritance suites.
inline std::vector<SymmetricBody> symmetric_suite() {
  std::vector<SymmetricBody> out;
  for (int n = 3; n <= 12; ++n) out.push_back({"regular_polygon", {{"n", double(n)}}, n});
  for (int k : {3, 5, 7}) out.push_back({"reuleaux_polygon", {{"k", double(k)}}, k});
  for (int k : {3, 5}) out.push_back({"disk_cap_regular_polygon", {{"k", double(k)}}, k});
  out.push_back({"cut_corner_triangle", {}, 3});
  out.push_back({"rectangle", {}, 2});
  for (int k = 2; k <= 8; ++k) out.push_back({"disk", {}, k});
  return out;
}

inline std::string label(const SymmetricBody& b) {
  std::string s = b.name;
  for (const auto& [key, v] : b.params) s += " " + key + "=" + std::to_string(static_cast<int>(v));
  return s + " k=" + std::to_string(b.k);
}

}  // namespace ref
