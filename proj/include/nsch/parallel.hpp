#pragma once

namespace nsch::parallel {

// Thread count used by the row-parallel kernels. Defaults to 1 so that the
// default build is bitwise deterministic; NSCH_THREADS overrides it
// (0 = let OpenMP decide).
int threads();
void set_threads(int n);

// Reads NSCH_THREADS once. Returns the resulting thread count.
int configure_from_env();

bool openmp_enabled();

}  // namespace nsch::parallel
