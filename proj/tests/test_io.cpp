#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cheeger/catalog.hpp"
#include "cheeger/cli.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/io.hpp"
#include "cheeger/svg.hpp"
#include "support.hpp"

using namespace cheeger;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(cli::RunConfig cfg) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig catalog_cfg(const std::string& command, const std::string& name,
                           std::vector<std::string> params = {}) {
  cli::RunConfig cfg;
  cfg.command = command;
  cfg.catalog = name;
  cfg.params = std::move(params);
  return cfg;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::ofstream(name) << text;
  return name;
}

}  // namespace

TEST_CASE("dump uses 17 significant digits and fixed key order") {
  Json j;
  j["b"] = 0.1;
  j["a"] = 2.0;
  j["n"] = 3;
  j["p"] = io::point_json({1.0 / 3.0, -0.0});
  CHECK(io::dump(j, 0) == R"({"b":0.10000000000000001,"a":2.0,"n":3,"p":[0.33333333333333331,-0.0]})");
  Json bad;
  bad["x"] = std::numeric_limits<double>::infinity();
  CHECK(io::dump(bad, 0) == R"({"x":null})");
}

TEST_CASE("body parsing") {
  SUBCASE("polygon in either orientation") {
    const auto ccw = io::parse_body(Json::parse(R"({"kind":"polygon","vertices":[[0,0],[1,0],[1,1],[0,1]]})"));
    const auto cw = io::parse_body(Json::parse(R"({"kind":"polygon","vertices":[[0,0],[0,1],[1,1],[1,0]]})"));
    CHECK(area(*ccw.chain) == doctest::Approx(1.0));
    CHECK(area(*cw.chain) == doctest::Approx(1.0));
    CHECK(ccw.spec.halfplanes.size() == 4);
  }
  SUBCASE("non-convex polygon names the reflex vertex") {
    try {
      io::parse_body(Json::parse(R"({"kind":"polygon","vertices":[[0,0],[2,0],[1,0.5],[2,2],[0,2]]})"));
      FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
      CHECK(std::string(e.what()).find("(1, 0.5)") != std::string::npos);
    }
  }
  SUBCASE("constraints with disks and arcs") {
    const auto b = io::parse_body(Json::parse(R"({"kind":"constraints",
      "halfplanes":[{"normal":[0,1],"offset":0.5},{"normal":[0,-1],"offset":0.5}],
      "disks":[{"center":[0,0],"radius":1}],
      "arcs":[{"center":[0,0],"radius":0.9,"from_angle":-0.5,"to_angle":0.5}]})"));
    CHECK(b.spec.halfplanes.size() == 2);
    CHECK(b.spec.disks.size() == 1);
    CHECK(b.spec.arcs.size() == 1);
    CHECK_FALSE(b.chain);
  }
  SUBCASE("catalog") {
    const auto b = io::parse_body(Json::parse(R"({"kind":"catalog","name":"reuleaux_polygon","params":{"k":5}})"));
    CHECK(b.name == "reuleaux_polygon");
    CHECK(b.chain->pieces.size() == 5);
  }
  SUBCASE("malformed input") {
    for (const char* text : {R"({"kind":"hexagon"})", R"({"vertices":[]})", R"({"kind":"polygon","vertices":[[0,0],[1,0]]})",
                             R"({"kind":"constraints","halfplanes":[{"normal":[2,0],"offset":1}]})",
                             R"({"kind":"constraints","disks":[{"center":[0],"radius":1}]})",
                             R"({"kind":"constraints"})", R"([1,2])"}) {
      CAPTURE(text);
      CHECK_THROWS_AS(io::parse_body(Json::parse(text)), InvalidInput);
    }
    CHECK_THROWS_AS(io::load_body("does/not/exist.json"), InvalidInput);
  }
}

TEST_CASE("chains round trip through JSON") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto b = make_catalog(name);
    const std::string text = io::dump(io::chain_json(b.chain));
    const auto back = io::parse_chain(Json::parse(text));
    REQUIRE(back.pieces.size() == b.chain.pieces.size());
    CHECK(area(back) == area(b.chain));
    CHECK(io::dump(io::chain_json(back)) == text);
  }
}

TEST_CASE("svg paths") {
  const BoundaryChain square = polygon_chain({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(svg::path_data(square) == "M 0 0 L 1 0 L 1 -1 L 0 -1 L 0 0 Z");
  const BoundaryChain disk{{Arc{{0, 0}, 1, 0, kTwoPi}}};
  CHECK(svg::path_data(disk) == "M 1 0 A 1 1 0 0 0 -1 -1.224646799e-16 A 1 1 0 0 0 1 2.449293598e-16 Z");
  const BoundaryChain half{{Arc{{0, 0}, 1, 0, kPi}, Segment{{-1, 0}, {1, 0}}}};
  CHECK(svg::path_data(half).find(" A 1 1 0 0 0 ") != std::string::npos);

  svg::Scene scene;
  scene.omega = square;
  scene.dots = {{1, 1}};
  const std::string text = svg::render(scene);
  CHECK(text.find("viewBox=\"-0.05 -1.05 1.1 1.1\"") != std::string::npos);
  CHECK(text.find("<g id=\"omega\">") != std::string::npos);
  CHECK(text.find("<g id=\"dots\">") != std::string::npos);
  CHECK(text.find("cheeger-set") == std::string::npos);
}

TEST_CASE("cli solve") {
  SUBCASE("disk") {
    const auto r = run(catalog_cfg("solve", "disk"));
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["h"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"s", "h", "area_omega", "cheeger", "contacts", "inner_set", "omega"});
    CHECK(j["contacts"][0]["kind"] == "boundary");
    // emitted boundaries re-parse and re-validate
    CHECK_NOTHROW(io::parse_chain(j["cheeger"]["boundary"]));
  }
  SUBCASE("unit square by circumradius") {
    const auto r = run(catalog_cfg("solve", "regular_polygon", {"n=4", "circumradius=0.7071067811865476"}));
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["h"].get<double>() == doctest::Approx(2 + std::sqrt(ref::pi)).epsilon(1e-9));
  }
  SUBCASE("non-convex input") {
    cli::RunConfig cfg;
    cfg.command = "solve";
    cfg.input = write_temp("cli_bad.json", R"({"kind":"polygon","vertices":[[0,0],[2,0],[1,0.3],[1,2]]})");
    const auto r = run(cfg);
    std::remove("cli_bad.json");
    CHECK(r.code == 1);
    CHECK(r.err.find("reflex vertex") != std::string::npos);
    CHECK(r.err.find("(1, 0.3)") != std::string::npos);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
  SUBCASE("determinism") {
    const auto a = run(catalog_cfg("solve", "stadium"));
    const auto b = run(catalog_cfg("solve", "stadium"));
    CHECK(a.out == b.out);
  }
  SUBCASE("input errors") {
    CHECK(run(catalog_cfg("solve", "heptagon")).code == 1);
    CHECK(run(catalog_cfg("solve", "disk", {"radius"})).code == 1);
    CHECK(run(catalog_cfg("solve", "disk", {"radius=abc"})).code == 1);
    cli::RunConfig none;
    none.command = "solve";
    CHECK(run(none).code == 1);
    auto bad_tol = catalog_cfg("solve", "disk");
    bad_tol.root_tol = -1.0;
    CHECK(run(bad_tol).code == 1);
  }
}

TEST_CASE("cli symmetry") {
  SUBCASE("Reuleaux pentagon") {
    auto cfg = catalog_cfg("symmetry", "reuleaux_polygon", {"k=5"});
    cfg.k = 5;
    const auto r = run(cfg);
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["cheeger_regular"] == true);
    CHECK(j["dots"].size() == 5);
    CHECK(j["rotation_gap"].get<double>() <= 1e-9);
  }
  SUBCASE("rectangle k=2: dots at a pair of opposite corners") {
    auto cfg = catalog_cfg("symmetry", "rectangle", {"w=2", "h=1"});
    cfg.k = 2;
    const auto r = run(cfg);
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["cheeger_regular"] == true);
    REQUIRE(j["dots"].size() == 2);
    const Point d0 = io::parse_point(j["dots"][0]);
    const Point d1 = io::parse_point(j["dots"][1]);
    CHECK(std::abs(std::abs(d0.x) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(d0.y) - 0.5) < 1e-12);
    CHECK(distance(d0, -d1) < 1e-12);
  }
  SUBCASE("square has no 3-fold symmetry") {
    auto cfg = catalog_cfg("symmetry", "regular_polygon", {"n=4"});
    cfg.k = 3;
    const auto r = run(cfg);
    CHECK(r.code == 3);
    CHECK(r.err.find("residual") != std::string::npos);
    CHECK(Json::parse(r.out)["accepted"] == false);
  }
  SUBCASE("k is required") {
    CHECK(run(catalog_cfg("symmetry", "disk")).code == 1);
  }
}

TEST_CASE("cli oracle") {
  auto square = catalog_cfg("oracle", "regular_polygon", {"n=4", "circumradius=0.7071067811865476"});
  square.grid = 1024;
  auto r = run(square);
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["rel_err"].get<double>() <= 0.02);
  CHECK(j["n"] == 1024);

  auto disk = catalog_cfg("oracle", "disk");
  disk.grid = 512;
  r = run(disk);
  CHECK(Json::parse(r.out)["rel_err"].get<double>() <= 0.02);

  square.grid = 64;
  r = run(square);
  if (Json::parse(r.out)["rel_err"].get<double>() > 0.02) CHECK(r.code != 0);
  square.grid = 10;
  CHECK(run(square).code == 1);
}

TEST_CASE("cli render and catalog") {
  SUBCASE("disk render: three concentric circles") {
    auto cfg = catalog_cfg("render", "disk");
    const auto r = run(cfg);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("<g id=\"omega\">") != std::string::npos);
    CHECK(r.out.find("<g id=\"inner-set\">") != std::string::npos);
    CHECK(r.out.find("<g id=\"cheeger-set\">") != std::string::npos);
    CHECK(r.out.find("A 0.5 0.5") != std::string::npos);
  }
  SUBCASE("body with dots") {
    auto cfg = catalog_cfg("render", "disk_cap_regular_polygon", {"k=3"});
    cfg.k = 3;
    const auto r = run(cfg);
    REQUIRE(r.code == 0);
    std::size_t dots = 0;
    const auto at = r.out.find("<g id=\"dots\">");
    REQUIRE(at != std::string::npos);
    for (auto p = r.out.find("<circle", at); p != std::string::npos && p < r.out.find("</g>", at);
         p = r.out.find("<circle", p + 1)) {
      ++dots;
    }
    CHECK(dots == 3);
  }
  SUBCASE("unwritable path") {
    auto cfg = catalog_cfg("render", "disk");
    cfg.svg_path = "/nonexistent/dir/out.svg";
    CHECK(run(cfg).code == 1);
  }
  SUBCASE("catalog listing and round trip") {
    cli::RunConfig list;
    list.command = "catalog";
    const auto l = run(list);
    REQUIRE(l.code == 0);
    CHECK(Json::parse(l.out)["shapes"].size() == catalog_names().size());

    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      const auto emitted = run(catalog_cfg("catalog", name));
      REQUIRE(emitted.code == 0);
      cli::RunConfig from_file;
      from_file.command = "solve";
      from_file.input = write_temp("cli_body.json", emitted.out);
      const auto a = run(from_file);
      const auto b = run(catalog_cfg("solve", name));
      std::remove("cli_body.json");
      REQUIRE(a.code == 0);
      CHECK(Json::parse(a.out)["h"].get<double>() == doctest::Approx(Json::parse(b.out)["h"].get<double>()).epsilon(1e-12));
    }
  }
}
