#pragma once

#include <filesystem>

#include "nsch/field.hpp"

namespace nsch {

// Binary field snapshot, little-endian:
//   "NSCH" | u32 nx | u32 ny | f64 Lx | f64 Ly | f64 t | nx*ny f64 (row-major, rows along y)
// The origin is not stored; readers place the grid at x0 = 0, y0 = -Ly/2.

struct Snapshot {
  ScalarField field;
  double t = 0.0;
};

void write_snapshot(const std::filesystem::path& path, const ScalarField& f, double t);

/// Throws std::runtime_error on a missing file, bad magic or truncated data.
Snapshot read_snapshot(const std::filesystem::path& path, Boundary bc = Boundary::neumann_zero);

}  // namespace nsch
