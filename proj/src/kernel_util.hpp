#pragma once

#include "nsch/field.hpp"
#include "nsch/parallel.hpp"

// Row-parallel loop over j; `nthreads` must be in scope.
#define NSCH_OMP_ROWS _Pragma("omp parallel for schedule(static) num_threads(nthreads) if(nthreads > 1)")

namespace nsch::detail {

inline double ghost_sign(Boundary bc) { return bc == Boundary::dirichlet_zero ? -1.0 : 1.0; }

// Pointers to the rows below/above row j and the sign to apply to them
// (ghost rows reuse the boundary row).
struct RowView {
  const double* mid;
  const double* below;
  const double* above;
  double sbelow;
  double sabove;
};

inline RowView row_view(const ScalarField& f, int j) {
  const Grid& g = f.grid();
  const double* base = f.values().data();
  const double s = ghost_sign(f.bc());
  RowView r{};
  r.mid = base + static_cast<std::size_t>(j) * g.nx;
  r.below = j > 0 ? r.mid - g.nx : r.mid;
  r.above = j < g.ny - 1 ? r.mid + g.nx : r.mid;
  r.sbelow = j > 0 ? 1.0 : s;
  r.sabove = j < g.ny - 1 ? 1.0 : s;
  return r;
}

inline double left_of(const double* row, int i, double s) { return i > 0 ? row[i - 1] : s * row[0]; }
inline double right_of(const double* row, int i, int nx, double s) {
  return i < nx - 1 ? row[i + 1] : s * row[nx - 1];
}

}  // namespace nsch::detail
