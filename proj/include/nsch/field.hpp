#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace nsch {

/// Uniform collocated rectangular grid. Cell (i, j) has its center at
/// origin + ((i + 1/2) dx, (j + 1/2) dy); storage is row-major in j.
struct Grid {
  int nx = 64;
  int ny = 32;
  double lx = 2.0;
  double ly = 1.0;
  double x0 = 0.0;
  double y0 = -0.5;

  /// Validating constructor; nx, ny >= 8 and positive extents.
  static Grid make(int nx, int ny, double lx = 2.0, double ly = 1.0, double x0 = 0.0,
                   double y0 = -0.5);

  double dx() const { return lx / nx; }
  double dy() const { return ly / ny; }
  double cell_area() const { return dx() * dy(); }
  double area() const { return lx * ly; }
  double xc(int i) const { return x0 + (i + 0.5) * dx(); }
  double yc(int j) const { return y0 + (j + 0.5) * dy(); }
  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
  }
  bool contains(double x, double y) const {
    return x >= x0 && x <= x0 + lx && y >= y0 && y <= y0 + ly;
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Boundary treatment applied by the stencil operators through ghost cells:
/// neumann_zero mirrors the boundary cell, dirichlet_zero negates it.
enum class Boundary { neumann_zero, dirichlet_zero };

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& grid, Boundary bc = Boundary::neumann_zero, double fill = 0.0);

  /// Samples fn at every cell center.
  static ScalarField from_function(const Grid& grid, const std::function<double(double, double)>& fn,
                                   Boundary bc = Boundary::neumann_zero);

  const Grid& grid() const { return grid_; }
  Boundary bc() const { return bc_; }
  void set_bc(Boundary bc) { bc_ = bc; }

  double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }
  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& operator[](std::size_t k) { return values_[k]; }
  double operator[](std::size_t k) const { return values_[k]; }

  /// Value including one layer of ghost cells (i in [-1, nx], j in [-1, ny]).
  double with_ghost(int i, int j) const;

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  bool all_finite() const;
  void fill(double v);

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);
  /// this += a * o
  ScalarField& axpy(double a, const ScalarField& o);

 private:
  Grid grid_{};
  Boundary bc_ = Boundary::neumann_zero;
  std::vector<double> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
/// Pointwise product; keeps the bc of a.
ScalarField hadamard(const ScalarField& a, const ScalarField& b);

/// Velocity-like vector field; both components share one grid.
struct VectorField2 {
  ScalarField x;
  ScalarField y;

  VectorField2() = default;
  explicit VectorField2(const Grid& grid, Boundary bc = Boundary::dirichlet_zero, double fill = 0.0)
      : x(grid, bc, fill), y(grid, bc, fill) {}
  VectorField2(ScalarField ux, ScalarField uy);

  const Grid& grid() const { return x.grid(); }
  bool all_finite() const { return x.all_finite() && y.all_finite(); }
};

/// 2x2 tensor field F with components F^{ij}; Neumann by default.
struct TensorField2 {
  ScalarField c11;
  ScalarField c12;
  ScalarField c21;
  ScalarField c22;

  TensorField2() = default;
  explicit TensorField2(const Grid& grid, Boundary bc = Boundary::neumann_zero)
      : c11(grid, bc), c12(grid, bc), c21(grid, bc), c22(grid, bc) {}

  static TensorField2 identity(const Grid& grid);

  const Grid& grid() const { return c11.grid(); }
  bool all_finite() const {
    return c11.all_finite() && c12.all_finite() && c21.all_finite() && c22.all_finite();
  }

  ScalarField& operator()(int i, int j);
  const ScalarField& operator()(int i, int j) const;
};

}  // namespace nsch
