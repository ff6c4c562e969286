#include "cheeger/catalog.hpp"

#include <cmath>
#include <set>

#include "cheeger/errors.hpp"

namespace cheeger {
namespace {

const std::map<ShapeKind, std::string> kNames = {
    {ShapeKind::kDisk, "disk"},
    {ShapeKind::kRegularPolygon, "regular_polygon"},
    {ShapeKind::kRectangle, "rectangle"},
    {ShapeKind::kReuleauxPolygon, "reuleaux_polygon"},
    {ShapeKind::kDiskCapRegularPolygon, "disk_cap_regular_polygon"},
    {ShapeKind::kCutCornerTriangle, "cut_corner_triangle"},
    {ShapeKind::kStadium, "stadium"},
};

int as_count(double v, const char* what) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-12) throw InvalidInput(std::string(what) + " must be an integer");
  return static_cast<int>(r);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidInput(std::string(what) + " must be positive");
}

ConstraintSpec polygon_spec(const std::vector<Point>& v) {
  ConstraintSpec spec;
  for (std::size_t i = 0; i < v.size(); ++i) {
    spec.halfplanes.push_back(halfplane_through(v[i], v[(i + 1) % v.size()]));
  }
  return spec;
}

CatalogBody polygon_body(const std::vector<Point>& v) {
  CatalogBody b;
  b.chain = polygon_chain(v);
  b.spec = polygon_spec(v);
  return b;
}

CatalogBody make_disk(const std::map<std::string, double>& p) {
  const double r = p.at("radius");
  require_positive(r, "radius");
  CatalogBody b;
  b.chain.pieces.emplace_back(Arc{{0.0, 0.0}, r, 0.0, kTwoPi});
  b.spec.disks.push_back({{0.0, 0.0}, r});
  return b;
}

CatalogBody make_regular_polygon(const std::map<std::string, double>& p) {
  const int n = as_count(p.at("n"), "n");
  const double rc = p.at("circumradius");
  if (n < 3) throw InvalidInput("regular_polygon needs n >= 3");
  require_positive(rc, "circumradius");
  std::vector<Point> v;
  for (int i = 0; i < n; ++i) v.push_back(unit_vector(kTwoPi * i / n) * rc);
  CatalogBody b = polygon_body(v);
  b.symmetry_order = n;
  return b;
}

CatalogBody make_rectangle(const std::map<std::string, double>& p) {
  const double w = p.at("w");
  const double h = p.at("h");
  require_positive(w, "w");
  require_positive(h, "h");
  CatalogBody b =
      polygon_body({{w / 2, -h / 2}, {w / 2, h / 2}, {-w / 2, h / 2}, {-w / 2, -h / 2}});
  b.symmetry_order = 2;
  return b;
}

CatalogBody make_reuleaux(const std::map<std::string, double>& p) {
  const int k = as_count(p.at("k"), "k");
  const double width = p.at("width");
  if (k < 3 || k % 2 == 0) throw InvalidInput("reuleaux_polygon needs odd k >= 3");
  require_positive(width, "width");
  // The width of a Reuleaux polygon is its longest diagonal.
  const double rc = width / (2.0 * std::cos(kPi / (2.0 * k)));
  std::vector<Point> v;
  for (int i = 0; i < k; ++i) v.push_back(unit_vector(kTwoPi * i / k) * rc);
  CatalogBody b;
  for (int m = 0; m < k; ++m) {
    const Point c = v[(m + (k + 1) / 2) % k];
    const double a0 = polar_angle(v[m] - c);
    b.chain.pieces.emplace_back(Arc{c, width, a0, a0 + kPi / k});
    b.spec.disks.push_back({v[m], width});
  }
  b.symmetry_order = k;
  return b;
}

CatalogBody make_disk_cap(const std::map<std::string, double>& p) {
  const int k = as_count(p.at("k"), "k");
  const double r = p.at("radius");
  const double a = p.at("apothem");
  if (k < 3) throw InvalidInput("disk_cap_regular_polygon needs k >= 3");
  require_positive(r, "radius");
  require_positive(a, "apothem");
  if (!(a < r) || !(a > r * std::cos(kPi / k))) {
    throw InvalidInput("disk_cap_regular_polygon needs radius*cos(pi/k) < apothem < radius");
  }
  const double beta = std::acos(a / r);
  CatalogBody b;
  const Point o{0.0, 0.0};
  for (int j = 0; j < k; ++j) {
    const double phi = kPi / k + kTwoPi * j / k;  // side normal
    const double prev = phi - kTwoPi / k;
    b.chain.pieces.emplace_back(Arc{o, r, prev + beta, phi - beta});
    b.chain.pieces.emplace_back(Segment{unit_vector(phi - beta) * r, unit_vector(phi + beta) * r});
    b.spec.halfplanes.push_back({unit_vector(phi), a});
  }
  b.spec.disks.push_back({o, r});
  b.symmetry_order = k;
  return b;
}

CatalogBody make_cut_triangle(const std::map<std::string, double>& p) {
  const double side = p.at("side");
  const double cut = p.at("cut");
  require_positive(side, "side");
  if (!(cut > 0.0 && cut < 0.5)) throw InvalidInput("cut must lie in (0, 1/2)");
  const double rc = side / std::sqrt(3.0);
  std::vector<Point> tri;
  for (int i = 0; i < 3; ++i) tri.push_back(unit_vector(kTwoPi * i / 3) * rc);
  std::vector<Point> hex;
  for (int i = 0; i < 3; ++i) {
    const Point d = tri[(i + 1) % 3] - tri[i];
    hex.push_back(tri[i] + d * cut);
    hex.push_back(tri[i] + d * (1.0 - cut));
  }
  const double delta = polar_angle(hex[0]);
  const double c = std::cos(-delta), s = std::sin(-delta);
  for (auto& q : hex) q = Point{c * q.x - s * q.y, s * q.x + c * q.y};
  hex[0].y = 0.0;
  CatalogBody b = polygon_body(hex);
  b.symmetry_order = 3;
  return b;
}

CatalogBody make_stadium(const std::map<std::string, double>& p) {
  const double w = p.at("w");
  const double h = p.at("h");
  const double rho = p.at("cap_radius");
  require_positive(w, "w");
  require_positive(h, "h");
  require_positive(rho, "cap_radius");
  if (rho * rho < (w * w + h * h) / 4.0) {
    throw InvalidInput("stadium needs cap_radius >= half the rectangle diagonal");
  }
  const double d = std::sqrt(rho * rho - h * h / 4.0);
  const double beta = std::asin(h / (2.0 * rho));
  const Point right{w / 2 - d, 0.0};
  const Point left{d - w / 2, 0.0};
  CatalogBody b;
  b.chain.pieces.emplace_back(Arc{right, rho, -beta, beta});
  b.chain.pieces.emplace_back(Segment{{w / 2, h / 2}, {-w / 2, h / 2}});
  b.chain.pieces.emplace_back(Arc{left, rho, kPi - beta, kPi + beta});
  b.chain.pieces.emplace_back(Segment{{-w / 2, -h / 2}, {w / 2, -h / 2}});
  b.spec.halfplanes.push_back({{0.0, 1.0}, h / 2});
  b.spec.halfplanes.push_back({{0.0, -1.0}, h / 2});
  b.spec.disks.push_back({right, rho});
  b.spec.disks.push_back({left, rho});
  b.symmetry_order = 2;
  return b;
}

}  // namespace

ShapeKind shape_kind_from_name(const std::string& name) {
  for (const auto& [kind, n] : kNames) {
    if (n == name) return kind;
  }
  throw InvalidInput("unknown catalog shape '" + name + "'");
}

std::string shape_name(ShapeKind kind) { return kNames.at(kind); }

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [kind, n] : kNames) out.push_back(n);
  return out;
}

std::map<std::string, double> default_params(ShapeKind kind,
                                             const std::map<std::string, double>& given) {
  std::map<std::string, double> d;
  switch (kind) {
    case ShapeKind::kDisk: d = {{"radius", 1.0}}; break;
    case ShapeKind::kRegularPolygon: d = {{"n", 4.0}, {"circumradius", 1.0}}; break;
    case ShapeKind::kRectangle: d = {{"w", 2.0}, {"h", 1.0}}; break;
    case ShapeKind::kReuleauxPolygon: d = {{"k", 3.0}, {"width", 1.0}}; break;
    case ShapeKind::kDiskCapRegularPolygon: d = {{"k", 3.0}, {"radius", 1.0}, {"apothem", 0.0}}; break;
    case ShapeKind::kCutCornerTriangle: d = {{"side", 1.0}, {"cut", 0.2}}; break;
    case ShapeKind::kStadium: d = {{"w", 2.0}, {"h", 1.0}, {"cap_radius", 1.5}}; break;
  }
  for (const auto& [key, value] : given) {
    if (!d.contains(key)) {
      throw InvalidInput("unknown parameter '" + key + "' for shape " + shape_name(kind));
    }
    d[key] = value;
  }
  if (kind == ShapeKind::kDiskCapRegularPolygon && !given.contains("apothem")) {
    d["apothem"] = d["radius"] * (1.0 + std::cos(kPi / std::round(d["k"]))) / 2.0;
  }
  return d;
}

CatalogBody make_catalog(const CatalogShape& shape) {
  const auto params = default_params(shape.kind, shape.params);
  CatalogBody body;
  switch (shape.kind) {
    case ShapeKind::kDisk: body = make_disk(params); break;
    case ShapeKind::kRegularPolygon: body = make_regular_polygon(params); break;
    case ShapeKind::kRectangle: body = make_rectangle(params); break;
    case ShapeKind::kReuleauxPolygon: body = make_reuleaux(params); break;
    case ShapeKind::kDiskCapRegularPolygon: body = make_disk_cap(params); break;
    case ShapeKind::kCutCornerTriangle: body = make_cut_triangle(params); break;
    case ShapeKind::kStadium: body = make_stadium(params); break;
  }
  body.name = shape_name(shape.kind);
  body.params = params;
  body.spec.reference_diameter = diameter(body.chain);
  return body;
}

CatalogBody make_catalog(const std::string& name, const std::map<std::string, double>& params) {
  return make_catalog(CatalogShape{shape_kind_from_name(name), params});
}

}  // namespace cheeger
