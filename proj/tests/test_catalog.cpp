#include <doctest.h>

#include <cmath>

#include "cheeger/catalog.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/inner_offset.hpp"
#include "support.hpp"

using namespace cheeger;

TEST_CASE("regular_polygon with circumradius sqrt(2)/2 is the unit square") {
  const auto b = make_catalog("regular_polygon", {{"n", 4}, {"circumradius", std::sqrt(0.5)}});
  REQUIRE(b.chain.pieces.size() == 4);
  CHECK(area(b.chain) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(perimeter(b.chain) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(b.symmetry_order == 4);
  // vertex on the +x axis
  const Point v = start_point(b.chain.pieces[0]);
  CHECK(v.x == doctest::Approx(std::sqrt(0.5)));
  CHECK(std::abs(v.y) < 1e-15);
}

TEST_CASE("disk cut by a triangle") {
  const auto b = make_catalog("disk_cap_regular_polygon", {{"k", 3}});
  const double a = area(b.chain);
  const double apothem = b.params.at("apothem");
  // triangle with that inradius: area = 3 sqrt(3) a^2
  const double triangle = 3.0 * std::sqrt(3.0) * apothem * apothem;
  CHECK(a < ref::pi);
  CHECK(a < triangle);
  REQUIRE(b.chain.pieces.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(is_arc(b.chain.pieces[i]) == (i % 2 == 0));
}

TEST_CASE("cut_corner_triangle is a hexagon") {
  const auto b = make_catalog("cut_corner_triangle", {{"side", 1}, {"cut", 0.2}});
  REQUIRE(is_polygon(b.chain));
  const auto v = polygon_vertices(b.chain);
  REQUIRE(v.size() == 6);
  // triangle minus three corner triangles of side 0.2
  CHECK(area(b.chain) == doctest::Approx(ref::triangle_area(1.0) - 3.0 * ref::triangle_area(0.2)).epsilon(1e-13));
  // sides alternate 0.6 and 0.2
  std::vector<double> lengths;
  for (const auto& p : b.chain.pieces) lengths.push_back(length(p));
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths[0] == doctest::Approx(0.2));
  CHECK(lengths[2] == doctest::Approx(0.2));
  CHECK(lengths[3] == doctest::Approx(0.6));
  CHECK(lengths[5] == doctest::Approx(0.6));
  CHECK(std::abs(v[0].y) < 1e-15);
}

TEST_CASE("catalog chains and constraint specs describe the same body") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto b = make_catalog(name);
    const double a = area(b.chain);
    const double extracted = area(extract_boundary(b.spec));
    CHECK(std::abs(extracted - a) <= 1e-12 * a);
    // independent: radial quadrature over the raw constraints
    const Point c = centroid(b.chain);
    CHECK(ref::radial_area(b.spec, c.x, c.y) == doctest::Approx(a).epsilon(1e-7));
  }
}

TEST_CASE("catalog bodies are centered at the origin") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const Point c = centroid(make_catalog(name).chain);
    CHECK(std::hypot(c.x, c.y) < 1e-14);
  }
}

TEST_CASE("invalid catalog parameters") {
  CHECK_THROWS_AS(make_catalog("reuleaux_polygon", {{"k", 4}}), InvalidInput);
  CHECK_THROWS_AS(make_catalog("reuleaux_polygon", {{"k", 3.5}}), InvalidInput);
  CHECK_THROWS_AS(make_catalog("cut_corner_triangle", {{"cut", 0.5}}), InvalidInput);
  CHECK_THROWS_AS(make_catalog("regular_polygon", {{"n", 2}}), InvalidInput);
  CHECK_THROWS_AS(make_catalog("disk", {{"radius", -1}}), InvalidInput);
  CHECK_THROWS_AS(make_catalog("disk", {{"colour", 1}}), InvalidInput);
  CHECK_THROWS_AS(make_catalog("stadium", {{"cap_radius", 0.5}}), InvalidInput);
  CHECK_THROWS_AS(make_catalog("triangle"), InvalidInput);
}

TEST_CASE("shape names round trip") {
  for (const auto& name : catalog_names()) CHECK(shape_name(shape_kind_from_name(name)) == name);
}
