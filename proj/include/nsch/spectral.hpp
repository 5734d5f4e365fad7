#pragma once

#include "nsch/field.hpp"

namespace nsch {

// Direct solves for constant-coefficient operators on the uniform rectangle.
// The Neumann 5-point Laplacian is diagonal in the type-II cosine basis and
// the negated-ghost (Dirichlet) Laplacian in the type-II sine basis, so
// Poisson, Helmholtz and biharmonic operators invert mode by mode (FFTW r2r).
// Every solve checks its round-trip residual against the stencil operator
// and throws SolverError above kSolverTolerance.

inline constexpr double kSolverTolerance = 1e-10;

struct SolveInfo {
  /// ||Op w - f||_inf / (||f||_inf + ||(Op - I) w||_inf); for Poisson the
  /// denominator is ||f - mean f||_inf.
  double residual = 0.0;
  /// |mean(rhs)| / ||rhs||_inf before mean removal (Poisson solves only).
  double compatibility_defect = 0.0;
};

/// Zero-mean q with laplacian(q) = rhs - mean(rhs).
ScalarField solve_poisson_neumann(const ScalarField& rhs, SolveInfo* info = nullptr);

/// Zero-mean q with divergence(gradient(q)) = rhs - mean(rhs), i.e. the wide
/// collocated Laplacian. This is the operator the exact projection inverts.
ScalarField solve_projection_poisson(const ScalarField& rhs, SolveInfo* info = nullptr);

/// (I - a laplacian) w = f with Neumann ghosts, a >= 0.
ScalarField solve_helmholtz_neumann(const ScalarField& f, double a, SolveInfo* info = nullptr);

/// (I - a laplacian) w = f with negated (wall-zero) ghosts, a >= 0.
ScalarField solve_helmholtz_dirichlet(const ScalarField& f, double a, SolveInfo* info = nullptr);

/// (I + b laplacian^2 - s laplacian) w = f under d_n w = d_n lap w = 0.
ScalarField solve_ch_implicit(const ScalarField& f, double b, double s, SolveInfo* info = nullptr);

}  // namespace nsch
