#pragma once

#include "nsch/field.hpp"

namespace nsch {

// Discrete differential operators on the collocated grid. All stencils read
// one ghost layer derived from the input's Boundary. Row loops are OpenMP
// parallel when parallel::threads() > 1; results do not depend on the
// thread count. Serial reference versions live in nsch::reference.

/// Central-difference gradient. Components are tagged dirichlet_zero so that
/// divergence(gradient(p)) is the exact composition used by the projection.
VectorField2 gradient(const ScalarField& f);

/// Central-difference divergence; ghosts from each component's bc.
ScalarField divergence(const VectorField2& v);

/// Standard 5-point Laplacian; result keeps f's bc.
ScalarField laplacian(const ScalarField& f);

/// Face-flux form of div(a grad f) with a_face = mean of the two cells
/// (wall faces take the interior cell value).
ScalarField div_coef_grad(const ScalarField& a, const ScalarField& f);

/// u . grad f (central).
ScalarField advect(const VectorField2& u, const ScalarField& f);

/// Conservative transport div(u f); the flux inherits u's bc.
ScalarField divergence_of_flux(const VectorField2& u, const ScalarField& f);

/// Row-wise divergence of a tensor: (d_x S11 + d_y S12, d_x S21 + d_y S22).
VectorField2 divergence_rows(const ScalarField& s11, const ScalarField& s12,
                             const ScalarField& s21, const ScalarField& s22);

/// Face-based integral of |grad f|^2, optionally weighted by a cell field
/// (face-averaged). Equals -inner(f, div_coef_grad(w, f)) to round-off.
double gradient_energy(const ScalarField& f);
double gradient_energy(const ScalarField& f, const ScalarField& weight);

// Midpoint-rule quadrature and norms.
double integrate(const ScalarField& f);
double mean(const ScalarField& f);
double inner(const ScalarField& f, const ScalarField& g);
double inner(const VectorField2& u, const VectorField2& v);
double norm_l2(const ScalarField& f);
double norm_l2(const VectorField2& u);
double norm_linf(const ScalarField& f);
double norm_linf(const VectorField2& u);

/// Bilinear interpolation between cell centers; points outside the hull of
/// cell centers are clamped onto it.
double sample_bilinear(const ScalarField& f, double x, double y);

namespace reference {
// Straightforward serial versions kept as test oracles for the kernels above.
VectorField2 gradient(const ScalarField& f);
ScalarField divergence(const VectorField2& v);
ScalarField laplacian(const ScalarField& f);
ScalarField div_coef_grad(const ScalarField& a, const ScalarField& f);
ScalarField advect(const VectorField2& u, const ScalarField& f);
}  // namespace reference

}  // namespace nsch
