#pragma once

#include <utility>

#include "nsch/field.hpp"
#include "nsch/model.hpp"

namespace nsch {

struct StepConfig {
  double dt = 1e-3;
  /// Cahn-Hilliard stabilization S in units of energy density (the scale of
  /// lambda*gamma/h^2); enters the update as dt*tau*S. Negative selects the
  /// default 2*lambda*gamma/h^2.
  double stab_s = -1.0;
  /// Constant viscosity for the implicit split; <= 0 selects max(eta_b, eta_t).
  double visc_split = 0.0;
  double cfl_safety = 0.5;
  double dt_max = 1e-3;

  double stabilization(const Params& p) const;
  double split_viscosity(const Params& p) const;
  void validate() const;
};

/// Leray projection onto discretely divergence-free fields: returns
/// (v - grad q, q) with q the zero-mean potential solving div grad q = div v.
std::pair<VectorField2, ScalarField> project(const VectorField2& v);

/// Largest admissible step: cfl_safety times the advective and explicit
/// F-diffusion limits, capped at dt_max.
double cfl_dt(const State& state, const Params& params, const StepConfig& cfg);

/// One IMEX step of the coupled system:
///  (a) linearly stabilized Cahn-Hilliard update with implicit biharmonic,
///  (b) explicit F update using phi^{n+1},
///  (c) momentum with implicit constant-viscosity split and pointwise
///      implicit friction,
///  (d) exact projection.
/// Throws SolverError / NonFiniteError tagged with the step index.
State step(const State& state, const Params& params, const StepConfig& cfg);

}  // namespace nsch
