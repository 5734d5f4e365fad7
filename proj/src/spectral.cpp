#include "nsch/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nsch/errors.hpp"
#include "nsch/operators.hpp"

namespace nsch {
namespace {

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : data(static_cast<double*>(fftw_malloc(sizeof(double) * n))) {
    if (!data) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  double* data;
};

enum class Basis { cosine, sine };

// Plans for one grid size. Execution through fftw_execute_r2r on fresh
// fftw_malloc buffers is thread-safe; planning is serialized by the registry.
class Transforms {
 public:
  Transforms(int nx, int ny) : nx_(nx), ny_(ny) {
    FftwBuffer a(size()), b(size());
    cos_fwd_ = fftw_plan_r2r_2d(ny, nx, a.data, b.data, FFTW_REDFT10, FFTW_REDFT10, FFTW_ESTIMATE);
    cos_inv_ = fftw_plan_r2r_2d(ny, nx, a.data, b.data, FFTW_REDFT01, FFTW_REDFT01, FFTW_ESTIMATE);
    sin_fwd_ = fftw_plan_r2r_2d(ny, nx, a.data, b.data, FFTW_RODFT10, FFTW_RODFT10, FFTW_ESTIMATE);
    sin_inv_ = fftw_plan_r2r_2d(ny, nx, a.data, b.data, FFTW_RODFT01, FFTW_RODFT01, FFTW_ESTIMATE);
    if (!cos_fwd_ || !cos_inv_ || !sin_fwd_ || !sin_inv_) throw std::runtime_error("FFTW planning failed");
  }
  ~Transforms() {
    fftw_destroy_plan(cos_fwd_);
    fftw_destroy_plan(cos_inv_);
    fftw_destroy_plan(sin_fwd_);
    fftw_destroy_plan(sin_inv_);
  }
  Transforms(const Transforms&) = delete;
  Transforms& operator=(const Transforms&) = delete;

  std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }

  // Applies w = T^{-1} diag(1/symbol) T f.
  template <class Symbol>
  void solve(Basis basis, const double* f, double* w, Symbol&& inv_symbol) const {
    FftwBuffer in(size()), spec(size());
    for (std::size_t k = 0; k < size(); ++k) in.data[k] = f[k];
    fftw_execute_r2r(basis == Basis::cosine ? cos_fwd_ : sin_fwd_, in.data, spec.data);
    const double norm = 1.0 / (4.0 * nx_ * ny_);
    for (int l = 0; l < ny_; ++l) {
      for (int k = 0; k < nx_; ++k) {
        spec.data[static_cast<std::size_t>(l) * nx_ + k] *= inv_symbol(k, l) * norm;
      }
    }
    fftw_execute_r2r(basis == Basis::cosine ? cos_inv_ : sin_inv_, spec.data, in.data);
    for (std::size_t k = 0; k < size(); ++k) w[k] = in.data[k];
  }

 private:
  int nx_;
  int ny_;
  fftw_plan cos_fwd_{};
  fftw_plan cos_inv_{};
  fftw_plan sin_fwd_{};
  fftw_plan sin_inv_{};
};

const Transforms& transforms_for(const Grid& g) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Transforms>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{g.nx, g.ny}];
  if (!slot) slot = std::make_unique<Transforms>(g.nx, g.ny);
  return *slot;
}

// Eigenvalues of the 1D second-difference operators (all <= 0).
std::vector<double> neumann_eigs(int n, double h) {
  std::vector<double> e(n);
  for (int k = 0; k < n; ++k) {
    const double s = std::sin(std::numbers::pi * k / (2.0 * n));
    e[k] = -4.0 * s * s / (h * h);
  }
  return e;
}

std::vector<double> dirichlet_eigs(int n, double h) {
  std::vector<double> e(n);
  for (int k = 0; k < n; ++k) {
    const double s = std::sin(std::numbers::pi * (k + 1) / (2.0 * n));
    e[k] = -4.0 * s * s / (h * h);
  }
  return e;
}

// Central difference applied twice with mirror then negated ghosts.
std::vector<double> wide_eigs(int n, double h) {
  std::vector<double> e(n);
  for (int k = 0; k < n; ++k) {
    const double s = std::sin(std::numbers::pi * k / n);
    e[k] = -s * s / (h * h);
  }
  return e;
}

void require_finite(const ScalarField& f, const char* what) {
  if (!f.all_finite()) throw NonFiniteError(std::string(what) + ": non-finite right-hand side");
}

void check_residual(double residual, const char* what) {
  if (!(residual <= kSolverTolerance)) {
    std::ostringstream os;
    os << what << ": relative residual " << residual << " exceeds " << kSolverTolerance;
    throw SolverError(os.str());
  }
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

template <class Apply, class Symbol>
ScalarField poisson_like(const ScalarField& rhs, SolveInfo* info, const char* what, Symbol&& symbol,
                         Apply&& apply) {
  require_finite(rhs, what);
  const Grid& g = rhs.grid();
  const double m = mean(rhs);
  const double peak = norm_linf(rhs);
  ScalarField centered = rhs;
  for (double& v : centered.values()) v -= m;

  ScalarField q(g, Boundary::neumann_zero);
  transforms_for(g).solve(Basis::cosine, centered.values().data(), q.values().data(),
                          [&](int k, int l) {
                            const double s = symbol(k, l);
                            return (k == 0 && l == 0) ? 0.0 : 1.0 / s;
                          });
  const double qm = mean(q);
  for (double& v : q.values()) v -= qm;

  const double scale = norm_linf(centered);
  const double residual = scale > 0.0 ? max_abs_diff(apply(q), centered) / scale : 0.0;
  if (info) {
    info->residual = residual;
    info->compatibility_defect = peak > 0.0 ? std::abs(m) / peak : 0.0;
  }
  check_residual(residual, what);
  return q;
}

// Shared tail for the (I + ...) solves.
void finish_shifted(const ScalarField& f, const ScalarField& w, const ScalarField& op_w, SolveInfo* info,
                    const char* what) {
  const double scale = norm_linf(f) + max_abs_diff(op_w, w);
  const double residual = scale > 0.0 ? max_abs_diff(op_w, f) / scale : 0.0;
  if (info) {
    info->residual = residual;
    info->compatibility_defect = 0.0;
  }
  check_residual(residual, what);
}

}  // namespace

ScalarField solve_poisson_neumann(const ScalarField& rhs, SolveInfo* info) {
  const Grid& g = rhs.grid();
  const auto ex = neumann_eigs(g.nx, g.dx());
  const auto ey = neumann_eigs(g.ny, g.dy());
  return poisson_like(
      rhs, info, "solve_poisson_neumann", [&](int k, int l) { return ex[k] + ey[l]; },
      [](const ScalarField& q) { return laplacian(q); });
}

ScalarField solve_projection_poisson(const ScalarField& rhs, SolveInfo* info) {
  const Grid& g = rhs.grid();
  const auto ex = wide_eigs(g.nx, g.dx());
  const auto ey = wide_eigs(g.ny, g.dy());
  return poisson_like(
      rhs, info, "solve_projection_poisson", [&](int k, int l) { return ex[k] + ey[l]; },
      [](const ScalarField& q) { return divergence(gradient(q)); });
}

ScalarField solve_helmholtz_neumann(const ScalarField& f, double a, SolveInfo* info) {
  if (!(a >= 0.0)) throw std::invalid_argument("solve_helmholtz_neumann: a must be >= 0");
  require_finite(f, "solve_helmholtz_neumann");
  const Grid& g = f.grid();
  const auto ex = neumann_eigs(g.nx, g.dx());
  const auto ey = neumann_eigs(g.ny, g.dy());
  ScalarField w(g, Boundary::neumann_zero);
  transforms_for(g).solve(Basis::cosine, f.values().data(), w.values().data(),
                          [&](int k, int l) { return 1.0 / (1.0 - a * (ex[k] + ey[l])); });
  ScalarField op_w = w;
  op_w.axpy(-a, laplacian(w));
  finish_shifted(f, w, op_w, info, "solve_helmholtz_neumann");
  return w;
}

ScalarField solve_helmholtz_dirichlet(const ScalarField& f, double a, SolveInfo* info) {
  if (!(a >= 0.0)) throw std::invalid_argument("solve_helmholtz_dirichlet: a must be >= 0");
  require_finite(f, "solve_helmholtz_dirichlet");
  const Grid& g = f.grid();
  const auto ex = dirichlet_eigs(g.nx, g.dx());
  const auto ey = dirichlet_eigs(g.ny, g.dy());
  ScalarField w(g, Boundary::dirichlet_zero);
  transforms_for(g).solve(Basis::sine, f.values().data(), w.values().data(),
                          [&](int k, int l) { return 1.0 / (1.0 - a * (ex[k] + ey[l])); });
  ScalarField op_w = w;
  op_w.axpy(-a, laplacian(w));
  finish_shifted(f, w, op_w, info, "solve_helmholtz_dirichlet");
  return w;
}

ScalarField solve_ch_implicit(const ScalarField& f, double b, double s, SolveInfo* info) {
  if (!(b >= 0.0) || !(s >= 0.0)) throw std::invalid_argument("solve_ch_implicit: b, s must be >= 0");
  require_finite(f, "solve_ch_implicit");
  const Grid& g = f.grid();
  const auto ex = neumann_eigs(g.nx, g.dx());
  const auto ey = neumann_eigs(g.ny, g.dy());
  ScalarField w(g, Boundary::neumann_zero);
  transforms_for(g).solve(Basis::cosine, f.values().data(), w.values().data(), [&](int k, int l) {
    const double lam = ex[k] + ey[l];
    return 1.0 / (1.0 + b * lam * lam - s * lam);
  });
  const ScalarField lap = laplacian(w);
  ScalarField op_w = w;
  op_w.axpy(b, laplacian(lap));
  op_w.axpy(-s, lap);
  finish_shifted(f, w, op_w, info, "solve_ch_implicit");
  return w;
}

}  // namespace nsch
