#include "cheeger/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace cheeger::svg {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

std::string xy(const Point& p) { return num(p.x) + " " + num(-p.y); }

void arc_to(std::string& d, const Arc& a, double from, double to) {
  const Point end = a.center + unit_vector(to) * a.radius;
  // counter-clockwise in the plane is sweep-flag 0 once y is flipped
  d += " A " + num(a.radius) + " " + num(a.radius) + " 0 " + (to - from > kPi ? "1" : "0") + " 0 " + xy(end);
}

std::string circle(const Point& c, double r, const char* style) {
  return "    <circle cx=\"" + num(c.x) + "\" cy=\"" + num(-c.y) + "\" r=\"" + num(r) + "\" " + style + "/>\n";
}

}  // namespace

std::string path_data(const BoundaryChain& chain) {
  if (chain.pieces.empty()) return "";
  std::string d = "M " + xy(start_point(chain.pieces.front()));
  for (const auto& p : chain.pieces) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      d += " L " + xy(s->end);
      continue;
    }
    const auto& a = std::get<Arc>(p);
    if (a.extent() >= kTwoPi - 1e-12) {
      const double mid = a.start_angle + 0.5 * a.extent();
      arc_to(d, a, a.start_angle, mid);
      arc_to(d, a, mid, a.end_angle);
    } else {
      arc_to(d, a, a.start_angle, a.end_angle);
    }
  }
  d += " Z";
  return d;
}

std::string render(const Scene& scene) {
  const BoundingBox box = bounding_box(scene.omega);
  const double w = box.max_x - box.min_x;
  const double h = box.max_y - box.min_y;
  const double margin = 0.05 * std::max(w, h);
  const double x0 = box.min_x - margin;
  const double y0 = -box.max_y - margin;
  const double vw = w + 2.0 * margin;
  const double vh = h + 2.0 * margin;
  const double stroke = 0.004 * std::max(vw, vh);
  const double dot_r = 2.5 * stroke;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(vw) + " " +
         num(vh) + "\" width=\"600\" height=\"" + num(600.0 * vh / vw) + "\">\n";
  auto layer = [&](const char* id, const BoundaryChain& c, const char* color, const std::string& extra) {
    out += "  <g id=\"" + std::string(id) + "\">\n";
    out += "    <path d=\"" + path_data(c) + "\" stroke=\"" + color + "\" stroke-width=\"" + num(stroke) + "\"" +
           extra + "/>\n";
    out += "  </g>\n";
  };
  layer("omega", scene.omega, "black", " fill=\"none\"");
  if (scene.cheeger_set) {
    layer("cheeger-set", *scene.cheeger_set, "#c0392b", " fill=\"#c0392b\" fill-opacity=\"0.15\"");
  }
  if (scene.inner_set) {
    const std::string dash = num(3.0 * stroke);
    layer("inner-set", *scene.inner_set, "gray", " fill=\"none\" stroke-dasharray=\"" + dash + " " + dash + "\"");
  }
  if (!scene.dots.empty()) {
    out += "  <g id=\"dots\">\n";
    for (const auto& p : scene.dots) out += circle(p, dot_r, "fill=\"#1f4e9c\"");
    out += "  </g>\n";
  }
  if (!scene.witnesses.empty()) {
    out += "  <g id=\"witnesses\">\n";
    for (const auto& p : scene.witnesses) out += circle(p, 0.7 * dot_r, "fill=\"#27ae60\"");
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cheeger::svg
