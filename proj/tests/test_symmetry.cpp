#include <doctest.h>

#include <cmath>
#include <random>

#include "cheeger/catalog.hpp"
#include "cheeger/cheeger_solver.hpp"
#include "cheeger/symmetry.hpp"
#include "support.hpp"

using namespace cheeger;

namespace {

BoundaryChain unit_square() { return polygon_chain({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}}); }
BoundaryChain circle(double r) { return {{Arc{{0, 0}, r, 0.0, kTwoPi}}}; }
BoundaryChain triangle() { return make_catalog("regular_polygon", {{"n", 3}, {"circumradius", 1 / std::sqrt(3.0)}}).chain; }

std::vector<int> boundary_contacts(const CheegerResult& r) {
  std::vector<int> out;
  for (const auto& c : r.contacts) {
    if (c.kind == ContactKind::kBoundary) out.push_back(c.piece);
  }
  return out;
}

Point turn(const Point& x, double angle, const Point& about) {
  const Point d = x - about;
  return about + Point{std::cos(angle) * d.x - std::sin(angle) * d.y, std::sin(angle) * d.x + std::cos(angle) * d.y};
}

double total_length(const BoundaryChain& c) {
  double t = 0;
  for (const auto& p : c.pieces) t += length(p);
  return t;
}

}  // namespace

TEST_CASE("hausdorff distance") {
  CHECK(hausdorff_distance(unit_square(), unit_square()) == 0.0);
  CHECK(hausdorff_distance(circle(1.0), circle(1.1)) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(hausdorff_distance(unit_square(), rotate(unit_square(), kPi / 2, {0, 0})) <= 1e-12);
  // square vs inscribed disk: the corners are sqrt(2)/2 - 1/2 away
  CHECK(hausdorff_distance(unit_square(), circle(0.5)) == doctest::Approx(std::sqrt(0.5) - 0.5).epsilon(1e-12));
  // moving one vertex: (1, 0) is 0.1/sqrt(1.01) from the tilted side, which
  // beats the 0.1/sqrt(2) of (1, 0.1) from the hypotenuse
  const BoundaryChain tri = polygon_chain({{0, 0}, {1, 0}, {0, 1}});
  const BoundaryChain tri2 = polygon_chain({{0, 0}, {1, 0.1}, {0, 1}});
  CHECK(hausdorff_distance(tri, tri2) == doctest::Approx(0.1 / std::sqrt(1.01)).epsilon(1e-12));
}

TEST_CASE("detect_symmetry") {
  const auto t = detect_symmetry(triangle(), 3, 1e-8);
  CHECK(t.accepted);
  CHECK(t.residual <= 1e-12);
  const auto s = detect_symmetry(unit_square(), 3, 1e-8);
  CHECK_FALSE(s.accepted);
  for (int k = 2; k <= 8; ++k) {
    const auto d = detect_symmetry(circle(1.0), k, 1e-8);
    CHECK(d.accepted);
    CHECK(d.residual <= 1e-12);
  }
  CHECK(detect_symmetry(unit_square(), 2, 1e-8).accepted);
  CHECK(detect_symmetry(unit_square(), 4, 1e-8).accepted);
}

TEST_CASE("dots and edges") {
  SUBCASE("unit square") {
    const auto sym = detect_symmetry(unit_square(), 4, 1e-8);
    const auto de = dots_and_edges(unit_square(), sym);
    CHECK(de.circumradius == doctest::Approx(std::sqrt(0.5)));
    REQUIRE(de.dots.size() == 4);
    REQUIRE(de.edges.size() == 4);
    CHECK(distance(de.dots[0], Point{0.5, 0.5}) < 1e-12);
    for (const auto& e : de.edges) {
      REQUIRE(e.pieces.size() == 1);
      CHECK(length(e.pieces[0]) == doctest::Approx(1.0));
    }
  }
  SUBCASE("disk, k=5") {
    const auto sym = detect_symmetry(circle(1.0), 5, 1e-8);
    const auto de = dots_and_edges(circle(1.0), sym);
    CHECK(de.circumradius == doctest::Approx(1.0));
    for (int i = 0; i < 5; ++i) {
      CHECK(distance(de.dots[i], unit_vector(2 * kPi * i / 5)) < 1e-12);
      REQUIRE(de.edges[i].pieces.size() == 1);
      CHECK(std::get<Arc>(de.edges[i].pieces[0]).extent() == doctest::Approx(2 * kPi / 5));
    }
  }
  SUBCASE("cut-corner triangle: each edge spans two sides") {
    const auto b = make_catalog("cut_corner_triangle");
    const auto sym = detect_symmetry(b.chain, 3, 1e-8);
    REQUIRE(sym.accepted);
    const auto de = dots_and_edges(b.chain, sym);
    REQUIRE(de.dots.size() == 3);
    for (const auto& e : de.edges) CHECK(e.pieces.size() == 2);
  }
  SUBCASE("properties across the suite") {
    for (const auto& body : ref::symmetric_suite()) {
      CAPTURE(ref::label(body));
      const auto b = make_catalog(body.name, body.params);
      const auto sym = detect_symmetry(b.chain, body.k, 1e-8 * diameter(b.chain));
      REQUIRE(sym.accepted);
      const auto de = dots_and_edges(b.chain, sym);
      const double diam = diameter(b.chain);
      double edge_total = 0.0;
      for (int i = 0; i < body.k; ++i) {
        const Point next = turn(de.dots[i], sym.angle(), sym.center);
        CHECK(distance(next, de.dots[(i + 1) % body.k]) <= 1e-9);
        CHECK(std::abs(distance(de.dots[i], sym.center) - de.circumradius) <= 1e-9 * diam);
        CHECK(distance_to_boundary(b.chain, de.dots[i]) <= 1e-9 * diam);
        edge_total += total_length(de.edges[i]);
      }
      CHECK(std::abs(edge_total - perimeter(b.chain)) <= 1e-9);
      // no boundary point farther than R
      for (const auto& p : b.chain.pieces) CHECK(farthest_distance(p, sym.center) <= de.circumradius + 1e-12);
      // first dot has the smallest polar angle among the dots
      const double a0 = wrap_angle(polar_angle(de.dots[0] - sym.center));
      CHECK((a0 < sym.angle() + 1e-12 || a0 > kTwoPi - 1e-12));
    }
  }
}

TEST_CASE("edge contacts") {
  SUBCASE("unit square: witnesses at side midpoints") {
    const auto b = make_catalog("rectangle", {{"w", 1}, {"h", 1}});
    const auto r = solve(b.spec);
    const auto sym = detect_symmetry(r.omega, 4, 1e-8);
    const auto de = dots_and_edges(r.omega, sym);
    const auto rep = check_edge_contacts(de, r.cheeger_set, boundary_contacts(r), 1e-7 * diameter(r.omega));
    CHECK(rep.cheeger_regular);
    REQUIRE(rep.edges.size() == 4);
    for (const auto& e : rep.edges) {
      REQUIRE(e.witness);
      const Point w = *e.witness;
      // midpoint of a side: one coordinate is 0, the other +-1/2
      CHECK(std::min(std::abs(w.x), std::abs(w.y)) <= 1e-12);
      CHECK(std::max(std::abs(w.x), std::abs(w.y)) == doctest::Approx(0.5));
    }
  }
  SUBCASE("Reuleaux pentagon and disk-cut triangle") {
    for (const auto& [name, k] : std::vector<std::pair<std::string, int>>{{"reuleaux_polygon", 5},
                                                                           {"disk_cap_regular_polygon", 3}}) {
      CAPTURE(name);
      const auto r = solve(make_catalog(name, {{"k", double(k)}}).spec);
      const auto sym = detect_symmetry(r.omega, k, 1e-8);
      const auto rep =
          check_edge_contacts(dots_and_edges(r.omega, sym), r.cheeger_set, boundary_contacts(r), 1e-7);
      CHECK(rep.cheeger_regular);
      CHECK(rep.edges.size() == static_cast<std::size_t>(k));
    }
  }
  SUBCASE("no contacts means not regular") {
    const auto r = solve(make_catalog("regular_polygon", {{"n", 4}}).spec);
    const auto sym = detect_symmetry(r.omega, 4, 1e-8);
    const auto rep = check_edge_contacts(dots_and_edges(r.omega, sym), r.cheeger_set, {}, 1e-7);
    CHECK_FALSE(rep.cheeger_regular);
    for (const auto& e : rep.edges) CHECK_FALSE(e.witness);
  }
  SUBCASE("disk: any admissible first dot works") {
    const auto r = solve(make_catalog("disk").spec);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int k = 2; k <= 8; ++k) {
      const auto sym = detect_symmetry(r.omega, k, 1e-8);
      for (int trial = 0; trial < 5; ++trial) {
        const auto de = dots_and_edges(r.omega, sym, unit_vector(angle(rng)));
        const auto rep = check_edge_contacts(de, r.cheeger_set, boundary_contacts(r), 1e-7);
        CHECK(rep.cheeger_regular);
      }
    }
  }
}

TEST_CASE("rotation inheritance") {
  const auto disk = solve(make_catalog("disk").spec);
  CHECK(check_rotation_inheritance(disk.cheeger_set, detect_symmetry(disk.omega, 5, 1e-8)) <= 1e-12);
  for (const char* name : {"regular_polygon", "cut_corner_triangle"}) {
    CAPTURE(name);
    const auto r = solve(make_catalog(name, name == std::string("regular_polygon")
                                                ? std::map<std::string, double>{{"n", 3}}
                                                : std::map<std::string, double>{})
                             .spec);
    const auto sym = detect_symmetry(r.omega, 3, 1e-8);
    CHECK(check_rotation_inheritance(r.cheeger_set, sym) <= 1e-9);
  }
}
