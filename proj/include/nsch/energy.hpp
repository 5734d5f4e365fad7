#pragma once

#include "nsch/field.hpp"
#include "nsch/model.hpp"

namespace nsch {

/// Energy split and dissipation channels at one time.
///
/// E_total = E_kinetic + E_mixed + E_elastic with
///   E_kinetic = int |u|^2,
///   E_mixed   = int lambda |grad phi|^2 + 2 lambda gamma f(phi),
///   E_elastic = int nu(phi) tr(F F^T - I).
/// The gradient term uses face differences, so that the phi-derivative of
/// E_mixed is exactly 2 (-lambda lap phi + lambda gamma f'(phi)) with the
/// 5-point Laplacian used everywhere else.
///
/// The continuous law reads dE/dt = -2 (D_visc + D_mu + D_Fdiff + D_friction).
struct EnergyReport {
  double t = 0.0;
  double E_total = 0.0;
  double E_kinetic = 0.0;
  double E_mixed = 0.0;
  double E_elastic = 0.0;
  double D_visc = 0.0;      ///< int eta(phi) |grad u|^2
  double D_mu = 0.0;        ///< int tau |grad mu|^2
  double D_Fdiff = 0.0;     ///< k int nu(phi)^2 sum_ij |grad F^ij|^2
  double D_friction = 0.0;  ///< int eta(phi) (1 - phi) |u|^2 / kappa(phi)
  double dE_dt_est = 0.0;

  double dissipation_rate() const { return 2.0 * (D_visc + D_mu + D_Fdiff + D_friction); }
};

/// Energy parts only; the D_* fields are left zero.
EnergyReport total_energy(const State& state, const Params& params);

/// Fills the four D_* channels of `report` (all >= 0).
void dissipation_channels(const State& state, const Params& params, EnergyReport& report);

/// total_energy followed by dissipation_channels.
EnergyReport energy_report(const State& state, const Params& params);

/// Mixed + elastic energy as a function of phi alone (the phi-dependent part).
double phase_energy(const ScalarField& phi, const TensorField2& F, const Params& params);

/// |(E(phi + eps psi) - E(phi - eps psi)) / (2 eps) - inner(2 mu, psi)| /
/// max(|inner(2 mu, psi)|, 1e-30). psi must look Neumann-compatible: its
/// one-sided normal slope at the walls may not exceed half of its largest
/// interior slope (std::invalid_argument otherwise). eps in [1e-6, 1e-3].
double first_variation_check(const State& state, const Params& params, const ScalarField& psi, double eps);

/// One row of the dissipation ledger.
struct LedgerRow {
  double t = 0.0;
  double dE_dt_est = 0.0;
  double dissipation = 0.0;  ///< -2 * sum of D_* at the new time
  double gap = 0.0;          ///< dE_dt_est - dissipation (numerical dissipation when < 0)
};

/// Sets now.dE_dt_est = (E_now - E_prev) / (t_now - t_prev) and returns the
/// balance row. Equal times give a zero rate.
LedgerRow ledger_append(const EnergyReport& prev, EnergyReport& now);

}  // namespace nsch
