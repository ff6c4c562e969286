#pragma once

#include <string>
#include <vector>

#include "cheeger/constraints.hpp"

// Brute-force verifier. Only the constraint types are shared with the exact
// solver; containment, bounding box and distances are computed here.
namespace cheeger::oracle {

struct RasterBody {
  int n = 0;          // requested resolution across the longer bbox side
  int nx = 0;         // grid size including the 2-cell padding ring
  int ny = 0;
  double cell = 0.0;
  Point origin;                // center of cell (0, 0)
  std::vector<char> inside;    // row-major, ny rows of nx cells
  std::vector<double> dist;    // distance to the nearest outside cell center; 0 outside

  Point center_of(int ix, int iy) const { return {origin.x + ix * cell, origin.y + iy * cell}; }
  double max_dist() const;
  long inside_count() const;
};

// Cell-center containment followed by an exact Euclidean distance transform.
// Throws InvalidInput for n < 64.
RasterBody rasterize(const ConstraintSpec& spec, int n);

// cell^2 * #{cells with dist > t}.
double oracle_offset_area(const RasterBody& raster, double t);

struct OracleResult {
  double s = 0.0;
  double h = 0.0;
};

OracleResult oracle_cheeger(const RasterBody& raster);
OracleResult oracle_cheeger(const ConstraintSpec& spec, int n);

// Binary PGM (P5, maxval 255), row 0 at the top, dist scaled so the largest
// value maps to 255.
void write_pgm(const RasterBody& raster, const std::string& path);

// Squared Euclidean distance transform of a binary grid: out[i] is the
// squared distance (in cells) from cell i to the nearest cell with
// seed[i] != 0.
std::vector<double> squared_edt(const std::vector<char>& seed, int nx, int ny);

}  // namespace cheeger::oracle
