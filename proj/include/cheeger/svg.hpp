#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cheeger/geometry.hpp"

namespace cheeger::svg {

struct Scene {
  BoundaryChain omega;
  std::optional<BoundaryChain> inner_set;
  std::optional<BoundaryChain> cheeger_set;
  std::vector<Point> dots;
  std::vector<Point> witnesses;
};

// Path data for a chain with y flipped (svg y = -y). Arcs use A commands;
// a full circle is drawn as two half arcs.
std::string path_data(const BoundaryChain& chain);

// Standalone SVG with one <g> per layer: omega, inner-set, cheeger-set, dots,
// witnesses. The viewBox is the body's bounding box plus a 5% margin.
std::string render(const Scene& scene);

}  // namespace cheeger::svg
