#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cheeger::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kNumericFailure = 2, kSymmetryRejected = 3 };

struct RunConfig {
  std::string command;  // solve, symmetry, oracle, render, catalog
  std::optional<std::string> input;
  std::optional<std::string> input_json;  // body given inline instead of a file
  std::optional<std::string> catalog;
  std::vector<std::string> params;  // "key=value"
  std::optional<int> k;
  std::optional<double> root_tol;     // --tol, absolute in s
  std::optional<double> contact_tol;  // absolute; default 1e-7 x diameter
  std::optional<double> sym_tol;      // absolute; default 1e-8 x diameter
  int grid = 1024;
  std::optional<std::string> json_path;
  std::optional<std::string> svg_path;
  std::optional<std::string> pgm_path;  // oracle raster dump
};

// Runs one command. JSON goes to json_path when set, otherwise to `out`;
// diagnostics go to `err`, one line each.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cheeger::cli
