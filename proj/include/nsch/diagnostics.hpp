#pragma once

#include <vector>

#include "nsch/field.hpp"
#include "nsch/model.hpp"

namespace nsch {

struct MetricsRow {
  double t = 0.0;
  double mean_phi = 0.0;
  double mean_phi_drift = 0.0;  ///< |mean(phi) - mean(phi0)| / |mean(phi0)|
  double div_u_norm = 0.0;      ///< L2 norm of divergence(u)
  double detF_max_err = 0.0;    ///< max |det F - 1|
  double phi_min = 0.0;
  double phi_max = 0.0;
  double interface_width = 0.0;  ///< NaN when the axial profile has no interface
  double linf_vs_init = 0.0;       ///< on the axial section y = 0
  double linf_vs_init_full = 0.0;  ///< over the whole grid
};

MetricsRow metrics(const State& state, const State& initial);

/// Samples along y = y0 at the cell-center abscissae.
struct Profile {
  std::vector<double> x;
  std::vector<double> value;
};

/// Linear interpolation between the two cell rows adjacent to y0.
Profile axial_section(const ScalarField& f, double y0 = 0.0);

/// Width of the right flank of the thrombus dip: distance between the first
/// phi = 0.1 crossing right of the minimum and the outermost phi = 0.9
/// crossing beyond it. Throws std::domain_error if either is missing.
double interface_width(const Profile& profile);

/// phi sampled bilinearly at (1, 0).
double midpoint_phi(const State& state);

}  // namespace nsch
