#pragma once

#include <cstdint>

#include "nsch/field.hpp"

namespace nsch {

/// Physical parameters of one run. Endpoint pairs follow the phase labels:
/// *_b is the value at phi = 1 (blood), *_t at phi = 0 (thrombus).
struct Params {
  double eta_b = 0.5;
  double eta_t = 1.0;
  double kappa_b = 5e4;
  double kappa_t = 1e-4;
  double nu_b = 1e-5;
  double nu_t = 1.0;
  double lambda = 1e-3;  ///< mixing energy density
  double gamma = 0.1;    ///< interfacial mobility
  double tau = 1e-4;     ///< relaxation
  double h = 0.08;       ///< interfacial thickness
  double k = 1e-5;       ///< F-diffusion coefficient
  double rho = 1.0;

  /// Throws std::invalid_argument unless all endpoints and h are positive,
  /// lambda, gamma, tau, k >= 0 and rho == 1.
  void validate() const;

  /// Lower/upper bounds shared by eta, kappa and nu for every phi.
  double alpha() const;
  double beta() const;
  double eta_max() const;
  double nu_max() const;
};

/// Time-stamped simulation unknowns (u, p, phi, F) on one grid.
struct State {
  double t = 0.0;
  std::int64_t steps = 0;
  VectorField2 u;
  ScalarField p;
  ScalarField phi;
  TensorField2 F;

  const Grid& grid() const { return phi.grid(); }
  bool all_finite() const {
    return u.all_finite() && p.all_finite() && phi.all_finite() && F.all_finite();
  }
};

struct DoubleWell {
  double f;
  double df;
  double d2f;
};

/// f(phi) = phi^2 (phi - 1)^2 / (4 h^2) and its first two derivatives.
DoubleWell double_well(double phi, double h);

struct Interpolant {
  double value;
  double slope;
};

/// Clamped cubic Hermite blend v_t + (v_b - v_t) phi^2 (3 - 2 phi); phi is
/// clamped to [0, 1] first, so the slope vanishes outside.
Interpolant visco(double phi, double nu_t, double nu_b);

/// Same interpolant, value only; used for eta(phi) and kappa(phi).
double material(double phi, double v_t, double v_b);

/// tr(F F^T - I) = |F|^2 - 2 pointwise.
ScalarField strain_trace(const TensorField2& F);

/// mu = -lambda lap(phi) + lambda gamma f'(phi) + nu'(phi)/2 tr(F F^T - I).
ScalarField chemical_potential(const ScalarField& phi, const TensorField2& F, const Params& params);
ScalarField chemical_potential(const State& state, const Params& params);

/// -lambda lap(phi) grad(phi) - lambda grad(|grad phi|^2 / 2).
VectorField2 capillary_force(const ScalarField& phi, double lambda);

/// div(nu(phi) (F F^T - I)).
VectorField2 elastic_force(const ScalarField& phi, const TensorField2& F, const Params& params);

/// c = eta(phi) (1 - phi) / kappa(phi), phi clamped to [0, 1]; c >= 0.
ScalarField friction_coefficient(const ScalarField& phi, const Params& params);

/// Cellwise nu(phi), eta(phi).
ScalarField viscoelasticity_field(const ScalarField& phi, const Params& params);
ScalarField viscosity_field(const ScalarField& phi, const Params& params);

/// grad(u) F + k (nu lap F + 2 grad(nu) . grad F) - u . grad F, per component.
TensorField2 f_rhs(const VectorField2& u, const ScalarField& phi, const TensorField2& F,
                   const Params& params);

/// det F - 1 pointwise.
ScalarField det_f_error(const TensorField2& F);

struct Residuals {
  double momentum = 0.0;
  double divergence = 0.0;
  double f_equation = 0.0;
  double ch_equation = 0.0;
  double det_f_max = 0.0;  ///< max |det F - 1|
};

/// L2 norms of the governing-equation residuals at `state`, with backward
/// differences (state - prev) / dt for the time derivatives.
Residuals residuals(const State& state, const Params& params, const State& prev, double dt);

}  // namespace nsch
