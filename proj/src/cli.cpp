#include "cheeger/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

#include "cheeger/catalog.hpp"
#include "cheeger/cheeger_solver.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/grid_oracle.hpp"
#include "cheeger/io.hpp"
#include "cheeger/svg.hpp"
#include "cheeger/symmetry.hpp"

namespace cheeger::cli {
namespace {

using io::Json;

constexpr double kContactFactor = 1e-7;
constexpr double kSymmetryFactor = 1e-8;
constexpr double kOracleTolerance = 0.02;

std::map<std::string, double> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, double> out;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("--param expects key=value, got '" + p + "'");
    const std::string key = p.substr(0, eq);
    const std::string val = p.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != val.size() || val.empty() || !std::isfinite(v)) {
      throw InvalidInput("--param " + key + ": '" + val + "' is not a number");
    }
    out[key] = v;
  }
  return out;
}

io::Body load(const RunConfig& cfg) {
  const int sources = int(cfg.input.has_value()) + int(cfg.input_json.has_value()) + int(cfg.catalog.has_value());
  if (sources > 1) throw InvalidInput("give either --input or --catalog, not both");
  if (sources == 0) throw InvalidInput("an input is required (--input or --catalog)");
  if (cfg.input_json) {
    if (!cfg.params.empty()) throw InvalidInput("--param only applies to --catalog");
    Json j;
    try {
      j = Json::parse(*cfg.input_json);
    } catch (const Json::parse_error& e) {
      throw InvalidInput(std::string("body is not valid JSON: ") + e.what());
    }
    return io::parse_body(j);
  }
  if (cfg.input) {
    if (!cfg.params.empty()) throw InvalidInput("--param only applies to --catalog");
    return io::load_body(*cfg.input);
  }
  return io::catalog_body(*cfg.catalog, parse_params(cfg.params));
}

double positive(const std::optional<double>& v, double fallback, const char* flag) {
  if (!v) return fallback;
  if (!(*v > 0.0) || !std::isfinite(*v)) throw InvalidInput(std::string(flag) + " must be positive");
  return *v;
}

SolverConfig solver_config(const RunConfig& cfg) {
  SolverConfig sc;
  sc.root_tol = positive(cfg.root_tol, sc.root_tol, "--tol");
  return sc;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
  if (!f) throw InvalidInput("cannot write " + path);
}

void emit_json(const RunConfig& cfg, const Json& j, std::ostream& out) {
  const std::string text = io::dump(j) + "\n";
  if (cfg.json_path) {
    write_text(*cfg.json_path, text);
  } else {
    out << text;
  }
}

struct SymmetryOutcome {
  io::SymmetryRun run;
  bool rejected = false;
};

SymmetryOutcome check_symmetry(const RunConfig& cfg, const CheegerResult& r) {
  if (!cfg.k) throw InvalidInput("--k is required");
  if (*cfg.k < 2) throw InvalidInput("--k must be at least 2");
  const double diam = diameter(r.omega);
  SymmetryOutcome o;
  o.run.sym = detect_symmetry(r.omega, *cfg.k, positive(cfg.sym_tol, kSymmetryFactor * diam, "--sym-tol"));
  if (!o.run.sym.accepted) {
    o.rejected = true;
    return o;
  }
  o.run.dots = dots_and_edges(r.omega, o.run.sym);
  std::vector<int> contacts;
  for (const auto& c : r.contacts) {
    if (c.kind == ContactKind::kBoundary) contacts.push_back(c.piece);
  }
  o.run.report = check_edge_contacts(o.run.dots, r.cheeger_set, contacts,
                                     positive(cfg.contact_tol, kContactFactor * diam, "--contact-tol"));
  o.run.report.rotation_inheritance_gap = check_rotation_inheritance(r.cheeger_set, o.run.sym);
  return o;
}

void render_to(const RunConfig& cfg, const CheegerResult& r, const io::SymmetryRun* sym, std::ostream& out) {
  svg::Scene scene;
  scene.omega = r.omega;
  scene.inner_set = r.inner_set;
  scene.cheeger_set = r.cheeger_set;
  if (sym) {
    scene.dots = sym->dots.dots;
    for (const auto& e : sym->report.edges) {
      if (e.witness) scene.witnesses.push_back(*e.witness);
    }
  }
  const std::string text = svg::render(scene);
  if (cfg.svg_path) {
    write_text(*cfg.svg_path, text);
  } else {
    out << text;
  }
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input || cfg.input_json) throw InvalidInput("catalog takes --catalog, not --input");
  if (!cfg.catalog) {
    if (!cfg.params.empty()) throw InvalidInput("--param only applies to --catalog");
    Json shapes = Json::array();
    for (const auto& name : catalog_names()) {
      Json params = Json::object();
      for (const auto& [k, v] : default_params(shape_kind_from_name(name))) params[k] = v;
      shapes.push_back(Json{{"name", name}, {"params", params}});
    }
    emit_json(cfg, Json{{"shapes", shapes}}, out);
    return kOk;
  }
  const CatalogBody b = make_catalog(*cfg.catalog, parse_params(cfg.params));
  Json j = io::spec_json(b.spec);
  Json params = Json::object();
  for (const auto& [k, v] : b.params) params[k] = v;
  j["source"] = Json{{"name", b.name}, {"params", params}};
  j["boundary"] = io::chain_json(b.chain);
  emit_json(cfg, j, out);
  return kOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const io::Body body = load(cfg);
  const CheegerResult r = solve(body.spec, solver_config(cfg));
  emit_json(cfg, io::result_json(r), out);
  if (cfg.svg_path) render_to(cfg, r, nullptr, out);
  return kOk;
}

int cmd_symmetry(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.k) throw InvalidInput("symmetry needs --k");
  const io::Body body = load(cfg);
  const CheegerResult r = solve(body.spec, solver_config(cfg));
  const SymmetryOutcome o = check_symmetry(cfg, r);
  if (o.rejected) {
    emit_json(cfg, io::rejection_json(o.run.sym), out);
    err << "symmetry rejected: k=" << o.run.sym.k << " residual " << o.run.sym.residual << "\n";
    return kSymmetryRejected;
  }
  emit_json(cfg, io::symmetry_json(o.run), out);
  if (cfg.svg_path) render_to(cfg, r, &o.run, out);
  return kOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const io::Body body = load(cfg);
  if (cfg.grid < 64) throw InvalidInput("--grid must be at least 64");
  const double h_exact = cheeger_constant(body.spec, solver_config(cfg));
  const oracle::RasterBody raster = oracle::rasterize(body.spec, cfg.grid);
  if (cfg.pgm_path) oracle::write_pgm(raster, *cfg.pgm_path);
  const oracle::OracleResult o = oracle::oracle_cheeger(raster);
  const double rel = std::abs(o.h - h_exact) / h_exact;
  Json j;
  j["h_exact"] = h_exact;
  j["h_oracle"] = o.h;
  j["rel_err"] = rel;
  j["n"] = cfg.grid;
  emit_json(cfg, j, out);
  if (rel > kOracleTolerance) {
    err << "oracle relative error " << rel << " exceeds " << kOracleTolerance << " at n=" << cfg.grid << "\n";
    return kNumericFailure;
  }
  return kOk;
}

int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const io::Body body = load(cfg);
  const CheegerResult r = solve(body.spec, solver_config(cfg));
  if (cfg.json_path) emit_json(cfg, io::result_json(r), out);
  if (!cfg.k) {
    render_to(cfg, r, nullptr, out);
    return kOk;
  }
  const SymmetryOutcome o = check_symmetry(cfg, r);
  if (o.rejected) {
    err << "symmetry rejected: k=" << o.run.sym.k << " residual " << o.run.sym.residual << "\n";
    return kSymmetryRejected;
  }
  render_to(cfg, r, &o.run, out);
  return kOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "catalog") return cmd_catalog(cfg, out);
    if (cfg.command == "solve") return cmd_solve(cfg, out);
    if (cfg.command == "symmetry") return cmd_symmetry(cfg, out, err);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out, err);
    if (cfg.command == "render") return cmd_render(cfg, out, err);
    throw InvalidInput("unknown command '" + cfg.command + "'");
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kNumericFailure;
  }
}

}  // namespace cheeger::cli
