#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsch/field.hpp"
#include "nsch/model.hpp"

namespace nsch {

enum class InitialShape { single, two };

/// One row of the case registry (thrombus benchmark table).
struct CaseSpec {
  std::string name;         ///< A, B, Bp, C, Cp, D, Dp
  std::string description;
  Params params;
  InitialShape phi0_kind = InitialShape::single;
  bool aa_sampling = false;  ///< energy-adaptive sampling case
  double t_end = 0.1;
  double window_dt = 0.05;   ///< output cadence
};

/// Throws UnknownCaseError for names outside the registry.
CaseSpec case_params(std::string_view name);

/// All registered cases in table order.
const std::vector<CaseSpec>& all_cases();

/// The default domain [0, 2] x [-0.5, 0.5] at the given resolution.
Grid default_grid(int nx, int ny);

struct ThrombusCenter {
  double x0 = 1.0;
  double y0 = 0.0;
  double radius = 0.25;
};

/// 0.5 (1 - (1 - 1e-12) tanh(2.6 (R - dist) / (sqrt(8) h))); ~0 inside, ~1 outside.
double phi0_single(double x, double y, double h, const ThrombusCenter& c = {});

/// Smooth minimum z0 z1 / (z0 + z1 - z0 z1 + 1e-20) of two single profiles
/// centred at x = 1 -/+ 0.23.
double phi0_two(double x, double y, double h);

/// u = 0, p = 0, F = I, phi from the case's initial shape, t = 0.
State init_state(const CaseSpec& spec, const Grid& grid);

}  // namespace nsch
