#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cheeger/catalog.hpp"
#include "cheeger/cli.hpp"

namespace py = pybind11;
using cheeger::cli::RunConfig;

namespace {

// Same commands as the executable; the body arrives as JSON text or a catalog
// name. Returns (exit code, stdout text, stderr text).
py::tuple run(const std::string& command, std::optional<std::string> body, std::optional<std::string> catalog,
              std::vector<std::string> params, std::optional<int> k, std::optional<double> tol,
              std::optional<double> contact_tol, std::optional<double> sym_tol, int grid) {
  RunConfig cfg;
  cfg.command = command;
  cfg.input_json = std::move(body);
  cfg.catalog = std::move(catalog);
  cfg.params = std::move(params);
  cfg.k = k;
  cfg.root_tol = tol;
  cfg.contact_tol = contact_tol;
  cfg.sym_tol = sym_tol;
  cfg.grid = grid;
  std::ostringstream out, err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = cheeger::cli::run(cfg, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_cheeger, m) {
  m.doc() = "Cheeger constants and Cheeger sets of planar convex bodies";
  m.def("run", &run, py::arg("command"), py::arg("body") = py::none(), py::arg("catalog") = py::none(),
        py::arg("params") = std::vector<std::string>{}, py::arg("k") = py::none(), py::arg("tol") = py::none(),
        py::arg("contact_tol") = py::none(), py::arg("sym_tol") = py::none(), py::arg("grid") = 1024);
  m.def("catalog_names", &cheeger::catalog_names);
}
