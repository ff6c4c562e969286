#include "cheeger/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "cheeger/errors.hpp"

namespace cheeger::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kPad = 2;

double dot2(double ax, double ay, double bx, double by) { return ax * bx + ay * by; }

// Violation of a single constraint at (x, y); <= 0 inside.
double halfplane_violation(const Halfplane& h, double x, double y) {
  const double len = std::hypot(h.normal.x, h.normal.y);
  return (dot2(h.normal.x, h.normal.y, x, y) - h.offset) / len;
}

double disk_violation(const Disk& d, double x, double y) {
  return std::hypot(x - d.center.x, y - d.center.y) - d.radius;
}

double arc_violation(const ArcConstraint& a, double x, double y) {
  const double dx = x - a.center.x, dy = y - a.center.y;
  const double span = a.to_angle - a.from_angle;
  double rel = std::atan2(dy, dx) - a.from_angle;
  rel -= 2.0 * M_PI * std::floor(rel / (2.0 * M_PI));
  if (rel <= span) return std::hypot(dx, dy) - a.radius;
  const double s0 = dx * std::cos(a.from_angle) + dy * std::sin(a.from_angle);
  const double s1 = dx * std::cos(a.to_angle) + dy * std::sin(a.to_angle);
  return std::max(s0, s1) - a.radius;
}

double violation(const ConstraintSpec& spec, double x, double y) {
  double v = -kInf;
  for (const auto& h : spec.halfplanes) v = std::max(v, halfplane_violation(h, x, y));
  for (const auto& d : spec.disks) v = std::max(v, disk_violation(d, x, y));
  for (const auto& a : spec.arcs) v = std::max(v, arc_violation(a, x, y));
  return v;
}

struct Line {
  double nx, ny, c;  // nx*x + ny*y = c, unit normal
};
struct Circle {
  double cx, cy, r;
};

// Bounding box of the body from candidate extreme points: pairwise carrier
// intersections and the axis-extreme points of every circle, kept when they
// satisfy all constraints.
void body_bbox(const ConstraintSpec& spec, double& x0, double& y0, double& x1, double& y1) {
  std::vector<Line> lines;
  std::vector<Circle> circles;
  double scale = 0.0;
  for (const auto& h : spec.halfplanes) {
    const double len = std::hypot(h.normal.x, h.normal.y);
    if (!(len > 0.0)) throw InvalidInput("halfplane with zero normal");
    lines.push_back({h.normal.x / len, h.normal.y / len, h.offset / len});
    scale = std::max(scale, std::abs(h.offset / len));
  }
  for (const auto& d : spec.disks) {
    circles.push_back({d.center.x, d.center.y, d.radius});
    scale = std::max(scale, std::hypot(d.center.x, d.center.y) + d.radius);
  }
  for (const auto& a : spec.arcs) {
    circles.push_back({a.center.x, a.center.y, a.radius});
    for (double th : {a.from_angle, a.to_angle}) {
      const double ux = std::cos(th), uy = std::sin(th);
      lines.push_back({ux, uy, a.radius + ux * a.center.x + uy * a.center.y});
    }
    scale = std::max(scale, std::hypot(a.center.x, a.center.y) + a.radius);
  }
  const double tol = 1e-9 * std::max(scale, 1e-300);

  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& a = lines[i];
      const auto& b = lines[j];
      const double det = a.nx * b.ny - a.ny * b.nx;
      if (std::abs(det) < 1e-14) continue;
      pts.emplace_back((a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det);
    }
  }
  for (const auto& c : circles) {
    pts.emplace_back(c.cx + c.r, c.cy);
    pts.emplace_back(c.cx - c.r, c.cy);
    pts.emplace_back(c.cx, c.cy + c.r);
    pts.emplace_back(c.cx, c.cy - c.r);
    for (const auto& l : lines) {
      const double d = l.c - (l.nx * c.cx + l.ny * c.cy);
      if (std::abs(d) > c.r) continue;
      const double half = std::sqrt(c.r * c.r - d * d);
      const double fx = c.cx + l.nx * d, fy = c.cy + l.ny * d;
      pts.emplace_back(fx - l.ny * half, fy + l.nx * half);
      pts.emplace_back(fx + l.ny * half, fy - l.nx * half);
    }
    for (const auto& o : circles) {
      const double dx = o.cx - c.cx, dy = o.cy - c.cy;
      const double d = std::hypot(dx, dy);
      if (d == 0.0 || d > c.r + o.r || d < std::abs(c.r - o.r)) continue;
      const double a = (c.r * c.r - o.r * o.r + d * d) / (2.0 * d);
      const double hh = std::sqrt(std::max(0.0, c.r * c.r - a * a));
      const double mx = c.cx + a * dx / d, my = c.cy + a * dy / d;
      pts.emplace_back(mx - hh * dy / d, my + hh * dx / d);
      pts.emplace_back(mx + hh * dy / d, my - hh * dx / d);
    }
  }
  x0 = y0 = kInf;
  x1 = y1 = -kInf;
  for (const auto& [x, y] : pts) {
    if (violation(spec, x, y) > tol) continue;
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
  if (!(x1 > x0 && y1 > y0)) throw InvalidInput("body is empty, degenerate or unbounded");
}

// Lower envelope of parabolas (Felzenszwalb and Huttenlocher). Cells with
// f = inf contribute no parabola.
void edt_1d(const double* f, double* d, int n, int* v, double* z) {
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == kInf) continue;
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
      continue;
    }
    double s;
    while (true) {
      s = ((f[q] + double(q) * q) - (f[v[k]] + double(v[k]) * v[k])) / (2.0 * (q - v[k]));
      if (s > z[k]) break;
      --k;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  if (k < 0) {
    std::fill(d, d + n, kInf);
    return;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace

std::vector<double> squared_edt(const std::vector<char>& seed, int nx, int ny) {
  std::vector<double> g(seed.size());
  for (std::size_t i = 0; i < seed.size(); ++i) g[i] = seed[i] ? 0.0 : kInf;
  const int m = std::max(nx, ny);
  std::vector<double> f(m), d(m), z(m + 1);
  std::vector<int> v(m);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) f[y] = g[static_cast<std::size_t>(y) * nx + x];
    edt_1d(f.data(), d.data(), ny, v.data(), z.data());
    for (int y = 0; y < ny; ++y) g[static_cast<std::size_t>(y) * nx + x] = d[y];
  }
  for (int y = 0; y < ny; ++y) {
    double* row = g.data() + static_cast<std::size_t>(y) * nx;
    std::copy(row, row + nx, f.begin());
    edt_1d(f.data(), d.data(), nx, v.data(), z.data());
    std::copy(d.begin(), d.begin() + nx, row);
  }
  return g;
}

double RasterBody::max_dist() const {
  double m = 0.0;
  for (double d : dist) m = std::max(m, d);
  return m;
}

long RasterBody::inside_count() const {
  return static_cast<long>(std::count(inside.begin(), inside.end(), char(1)));
}

RasterBody rasterize(const ConstraintSpec& spec, int n) {
  if (n < 64) throw InvalidInput("grid resolution must be at least 64");
  if (spec.size() == 0) throw InvalidInput("empty constraint set");
  double x0, y0, x1, y1;
  body_bbox(spec, x0, y0, x1, y1);

  RasterBody r;
  r.n = n;
  r.cell = std::max(x1 - x0, y1 - y0) / n;
  const int cx = static_cast<int>(std::ceil((x1 - x0) / r.cell - 1e-9));
  const int cy = static_cast<int>(std::ceil((y1 - y0) / r.cell - 1e-9));
  r.nx = cx + 2 * kPad;
  r.ny = cy + 2 * kPad;
  // center the body's box in the grid
  const double mx = 0.5 * (x0 + x1), my = 0.5 * (y0 + y1);
  r.origin = {mx - 0.5 * (r.nx - 1) * r.cell, my - 0.5 * (r.ny - 1) * r.cell};

  const std::size_t total = static_cast<std::size_t>(r.nx) * r.ny;
  r.inside.assign(total, 0);
  std::vector<char> outside(total, 1);
  for (int iy = 0; iy < r.ny; ++iy) {
    for (int ix = 0; ix < r.nx; ++ix) {
      const Point c = r.center_of(ix, iy);
      const std::size_t i = static_cast<std::size_t>(iy) * r.nx + ix;
      if (violation(spec, c.x, c.y) <= 0.0) {
        r.inside[i] = 1;
        outside[i] = 0;
      }
    }
  }
  std::vector<double> d2 = squared_edt(outside, r.nx, r.ny);
  r.dist.resize(total);
  for (std::size_t i = 0; i < total; ++i) r.dist[i] = r.inside[i] ? std::sqrt(d2[i]) * r.cell : 0.0;
  return r;
}

double oracle_offset_area(const RasterBody& raster, double t) {
  if (!(t >= 0.0)) throw InvalidInput("offset distance must be nonnegative");
  long count = 0;
  for (double d : raster.dist) count += d > t ? 1 : 0;
  return static_cast<double>(count) * raster.cell * raster.cell;
}

OracleResult oracle_cheeger(const RasterBody& raster) {
  // G only changes at distinct dist values, so bisect over the sorted values.
  std::vector<double> ds;
  ds.reserve(raster.dist.size());
  for (double d : raster.dist) {
    if (d > 0.0) ds.push_back(d);
  }
  if (ds.empty()) throw NumericFailure("raster has no inside cells", 0.0, 0.0);
  std::sort(ds.begin(), ds.end());
  const double cell2 = raster.cell * raster.cell;
  auto g = [&](double t) {
    const auto above = ds.end() - std::upper_bound(ds.begin(), ds.end(), t);
    return static_cast<double>(above) * cell2 - M_PI * t * t;
  };
  double lo = 0.0, hi = ds.back();
  if (g(hi) > 0.0) throw NumericFailure("oracle area balance positive at the largest distance", lo, hi);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * ds.back(); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  OracleResult out;
  out.s = 0.5 * (lo + hi);
  out.h = 1.0 / out.s;
  return out;
}

OracleResult oracle_cheeger(const ConstraintSpec& spec, int n) { return oracle_cheeger(rasterize(spec, n)); }

void write_pgm(const RasterBody& raster, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << "P5\n" << raster.nx << ' ' << raster.ny << "\n255\n";
  const double m = raster.max_dist();
  std::vector<unsigned char> row(raster.nx);
  for (int iy = raster.ny - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < raster.nx; ++ix) {
      const double d = raster.dist[static_cast<std::size_t>(iy) * raster.nx + ix];
      row[ix] = static_cast<unsigned char>(m > 0.0 ? std::lround(255.0 * d / m) : 0);
    }
    out.write(reinterpret_cast<const char*>(row.data()), raster.nx);
  }
  if (!out) throw InvalidInput("cannot write " + path);
}

}  // namespace cheeger::oracle
