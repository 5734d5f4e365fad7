// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit status
// when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nsch/cases.hpp"
#include "nsch/diagnostics.hpp"
#include "nsch/energy.hpp"
#include "nsch/operators.hpp"
#include "nsch/run.hpp"
#include "nsch/sampler.hpp"
#include "nsch/spectral.hpp"
#include "nsch/stepper.hpp"

namespace fs = std::filesystem;
using namespace nsch;

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen regression value: Case A, 64x32, max |det F - 1| at t = 0.1.
constexpr double kDetFDriftCaseA = 3.8730130214048586e-12;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = wall <= budget_s;
  const bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("%s  %-28s %s [%.2fs / %.0fs budget]%s\n", ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), wall,
              budget_s, in_time ? "" : " over budget");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

ScalarField random_field(const Grid& g, std::uint64_t seed, Boundary bc = Boundary::neumann_zero) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ScalarField f(g, bc);
  for (double& v : f.values()) v = u(rng);
  return f;
}

ScalarField random_cosine_series(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  ScalarField f(g);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const double c = n(rng) / (1.0 + a * a + b * b);
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
          f(i, j) += c * std::cos(a * kPi * g.xc(i) / g.lx) * std::cos(b * kPi * (g.yc(j) - g.y0) / g.ly);
        }
      }
    }
  }
  return f;
}

double max_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

// Advances with the run loop's step selection; `each` sees every new state.
State advance(const CaseSpec& spec, State s, double t_end, const std::function<void(const State&)>& each) {
  StepConfig cfg;
  while (s.t < t_end - 1e-12) {
    cfg.dt = std::min(cfl_dt(s, spec.params, cfg), t_end - s.t);
    s = step(s, spec.params, cfg);
    each(s);
  }
  return s;
}

Outcome operator_convergence() {
  const auto f = [](double x, double y) { return std::cos(kPi * x / 2.0) * std::cos(kPi * (y + 0.5)); };
  const auto fx = [](double x, double y) { return -kPi / 2.0 * std::sin(kPi * x / 2.0) * std::cos(kPi * (y + 0.5)); };
  const auto fy = [](double x, double y) { return -kPi * std::cos(kPi * x / 2.0) * std::sin(kPi * (y + 0.5)); };
  const auto vx = [](double x, double y) { return std::sin(kPi * x / 2.0) * std::cos(kPi * (y + 0.5)); };
  const auto vy = [](double x, double y) { return std::cos(kPi * x / 2.0) * std::sin(kPi * (y + 0.5)); };
  std::vector<std::array<double, 3>> err;
  for (int n : {32, 64, 128}) {
    const Grid g = default_grid(n, n / 2);
    const ScalarField s = ScalarField::from_function(g, f);
    const VectorField2 gs = gradient(s);
    const ScalarField dv = divergence(VectorField2(ScalarField::from_function(g, vx, Boundary::dirichlet_zero),
                                                   ScalarField::from_function(g, vy, Boundary::dirichlet_zero)));
    const ScalarField ls = laplacian(s);
    std::array<double, 3> e{0, 0, 0};
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const double x = g.xc(i), y = g.yc(j);
        e[0] = std::max({e[0], std::abs(gs.x(i, j) - fx(x, y)), std::abs(gs.y(i, j) - fy(x, y))});
        e[1] = std::max(e[1], std::abs(dv(i, j) - 1.5 * kPi * f(x, y)));
        e[2] = std::max(e[2], std::abs(ls(i, j) + 1.25 * kPi * kPi * f(x, y)));
      }
    }
    err.push_back(e);
  }
  double worst = 0.0;
  std::ostringstream os;
  const char* names[] = {"grad", "div", "lap"};
  for (int op = 0; op < 3; ++op) {
    os << names[op];
    for (int k = 0; k < 2; ++k) {
      const double order = std::log2(err[k][op] / err[k + 1][op]);
      worst = std::max(worst, std::abs(order - 2.0));
      os << ' ' << fmt("%.3f", order);
    }
    os << (op < 2 ? "; " : "");
  }
  return {worst <= 0.15, "orders " + os.str()};
}

Outcome solver_round_trips() {
  const Grid g = default_grid(64, 32);
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ScalarField rhs = random_field(g, seed);
    ScalarField centred = rhs;
    for (double& v : centred.values()) v -= mean(rhs);
    worst = std::max(worst, max_diff(laplacian(solve_poisson_neumann(rhs)), centred) / norm_linf(centred));

    const double a = 1e-3 * (seed + 1);
    const ScalarField w = solve_helmholtz_neumann(rhs, a);
    ScalarField hw = w;
    hw.axpy(-a, laplacian(w));
    worst = std::max(worst, max_diff(hw, rhs) / norm_linf(rhs));

    const double b = 1e-8 * (seed + 1), s = 1e-3 * seed;
    const ScalarField c = solve_ch_implicit(rhs, b, s);
    const ScalarField lc = laplacian(c);
    ScalarField cw = c;
    cw.axpy(b, laplacian(lc));
    cw.axpy(-s, lc);
    worst = std::max(worst, max_diff(cw, rhs) / norm_linf(rhs));
  }
  return {worst <= 1e-10, fmt("max relative residual %.2e over 60 solves", worst)};
}

Outcome projection() {
  const Grid g = default_grid(64, 32);
  const VectorField2 grad = gradient(ScalarField::from_function(g, [](double x, double) { return std::cos(kPi * x / 2.0); }));
  const VectorField2 pg = project(grad).first;
  const double div_after = norm_l2(divergence(pg));
  const double residual_velocity = norm_l2(pg);

  const ScalarField psi = ScalarField::from_function(g, [](double x, double y) {
    const double r2 = ((x - 0.9) * (x - 0.9) + (y - 0.05) * (y - 0.05)) / 0.1;
    return r2 < 1.0 ? std::pow(1.0 - r2, 4) : 0.0;
  });
  const VectorField2 gp = gradient(psi);
  ScalarField m = gp.x;
  m *= -1.0;
  const VectorField2 curl(gp.y, m);
  const VectorField2 pc = project(curl).first;
  const double change = std::max(max_diff(pc.x, curl.x), max_diff(pc.y, curl.y));
  return {div_after <= 1e-8 && residual_velocity <= 1e-8 && change <= 1e-10,
          fmt("gradient input: |div| %.1e |u| %.1e; div-free input change %.1e", div_after, residual_velocity, change)};
}

Outcome mass_conservation() {
  const CaseSpec spec = case_params("A");
  const State s0 = init_state(spec, default_grid(64, 32));
  const double m0 = mean(s0.phi);
  double worst = 0.0;
  advance(spec, s0, 0.1, [&](const State& s) { worst = std::max(worst, std::abs(mean(s.phi) - m0) / std::abs(m0)); });
  return {worst <= 1e-10, fmt("max relative drift %.2e", worst)};
}

Outcome energy_dissipation() {
  std::ostringstream os;
  bool ok = true;
  for (const char* name : {"A", "B", "Bp"}) {
    const CaseSpec spec = case_params(name);
    const State s0 = init_state(spec, default_grid(64, 32));
    const double e0 = total_energy(s0, spec.params).E_total;
    double prev = e0;
    double worst = -1e300;
    int violations = 0;
    advance(spec, s0, 0.1, [&](const State& s) {
      const double e = total_energy(s, spec.params).E_total;
      worst = std::max(worst, e - prev);
      if (e > prev + 1e-8 * e0 + 1e-12) ++violations;
      prev = e;
    });
    ok = ok && violations == 0;
    os << name << ": " << violations << " violations, max dE " << fmt("%.2e", worst) << "; ";
  }
  return {ok, os.str()};
}

Outcome variation_duality() {
  const CaseSpec spec = case_params("A");
  const State s = init_state(spec, default_grid(64, 32));
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    worst = std::max(worst, first_variation_check(s, spec.params, random_cosine_series(s.grid(), 500 + seed), 1e-4));
  }
  return {worst <= 1e-4, fmt("max relative error %.2e over 20 directions", worst)};
}

double final_width(const char* name, double t_end) {
  const CaseSpec spec = case_params(name);
  const State s = advance(spec, init_state(spec, default_grid(64, 32)), t_end, [](const State&) {});
  return interface_width(axial_section(s.phi));
}

Outcome case_b_ordering() {
  const double wb = final_width("B", 0.2);
  const double wbp = final_width("Bp", 0.2);
  return {wb > wbp, fmt("width B %.5f vs Bp %.5f", wb, wbp)};
}

Outcome case_c_polarization() {
  double mid[2];
  int k = 0;
  for (const char* name : {"C", "Cp"}) {
    const CaseSpec spec = case_params(name);
    mid[k++] = midpoint_phi(advance(spec, init_state(spec, default_grid(64, 32)), 0.3, [](const State&) {}));
  }
  return {mid[0] < mid[1], fmt("midpoint phi C %.5f vs Cp %.5f", mid[0], mid[1])};
}

Outcome case_d_energy() {
  CaseSpec thin = case_params("Dp");  // h = 0.05
  CaseSpec wide = case_params("A");   // h = 0.08, otherwise identical
  const Grid g = default_grid(64, 32);
  const double e_thin = total_energy(init_state(thin, g), thin.params).E_mixed;
  const double e_wide = total_energy(init_state(wide, g), wide.params).E_mixed;
  return {e_thin > e_wide, fmt("E_mixed h=0.05 %.5e vs h=0.08 %.5e", e_thin, e_wide)};
}

Outcome sampler_fidelity() {
  const Grid g = default_grid(128, 64);
  ScalarField bump = ScalarField::from_function(
      g, [](double x, double y) { return std::exp(-((x - 1.0) * (x - 1.0) + y * y) / (2.0 * 0.01)); });
  bump *= 1.0 / integrate(bump);
  SamplerConfig cfg;
  cfg.n_samples = 200000;
  cfg.burn_in = 10000;
  const SampleSet s = metropolis_hastings(bump, cfg);
  double mx = 0.0, my = 0.0;
  std::vector<double> emp(16 * 8, 0.0);
  for (const auto& p : s.points) {
    mx += p.x;
    my += p.y;
    const int bx = std::min(15, static_cast<int>(p.x / g.lx * 16));
    const int by = std::min(7, static_cast<int>((p.y - g.y0) / g.ly * 8));
    emp[static_cast<std::size_t>(by * 16 + bx)] += 1.0 / static_cast<double>(s.points.size());
  }
  mx /= static_cast<double>(s.points.size());
  my /= static_cast<double>(s.points.size());
  std::vector<double> target(16 * 8, 0.0);
  const int sub = 16;
  double total = 0.0;
  for (int j = 0; j < 8 * sub; ++j) {
    for (int i = 0; i < 16 * sub; ++i) {
      const double w = sample_bilinear(bump, (i + 0.5) * g.lx / (16 * sub), g.y0 + (j + 0.5) * g.ly / (8 * sub));
      target[static_cast<std::size_t>((j / sub) * 16 + i / sub)] += w;
      total += w;
    }
  }
  double tv = 0.0;
  for (std::size_t k = 0; k < target.size(); ++k) tv += std::abs(target[k] / total - emp[k]);
  tv *= 0.5;
  const double mean_err = std::max(std::abs(mx - 1.0), std::abs(my));

  const CaseSpec spec = case_params("A");
  const State st = init_state(spec, default_grid(64, 32));
  const ScalarField d = energy_density(st, spec.params, 0.05);
  const double band = 3.0 * spec.params.h;
  const Grid& sg = st.grid();
  double mass = 0.0;
  for (int j = 0; j < sg.ny; ++j) {
    for (int i = 0; i < sg.nx; ++i) {
      if (std::abs(std::hypot(sg.xc(i) - 1.0, sg.yc(j)) - 0.25) <= band) mass += d(i, j) * sg.cell_area();
    }
  }
  SamplerConfig scfg;
  scfg.n_samples = 50000;
  const SampleSet ss = sample_state(st, spec.params, scfg);
  double hits = 0.0;
  for (const auto& p : ss.points) hits += std::abs(std::hypot(p.x - 1.0, p.y) - 0.25) <= band;
  hits /= static_cast<double>(ss.points.size());
  return {mean_err <= 0.01 && tv <= 0.05 && mass >= 0.7 && hits >= 0.6,
          fmt("bump mean err %.4f TV %.4f; annulus mass %.3f samples %.3f", mean_err, tv, mass, hits)};
}

std::vector<std::vector<double>> read_rows(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::stringstream ls(line);
    std::string cell;
    std::vector<double> r;
    while (std::getline(ls, cell, ',')) r.push_back(cell == "nan" ? std::nan("") : std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome det_f_monitoring(const fs::path& scratch) {
  RunConfig cfg;
  cfg.case_name = "A";
  cfg.t_end = 0.1;
  cfg.out_dir = scratch / "detf";
  std::ostringstream log;
  if (run(cfg, log) != kExitOk) return {false, "run failed: " + log.str()};
  const auto rows = read_rows(cfg.out_dir / "metrics.csv");
  if (rows.size() != 3) return {false, fmt("expected 3 cadence rows, got %.0f", static_cast<double>(rows.size()))};
  const double at0 = rows.front()[4];
  const double at_end = rows.back()[4];
  const bool ok = at0 == 0.0 && std::abs(rows.back()[0] - 0.1) < 1e-12 &&
                  std::abs(at_end - kDetFDriftCaseA) <= 0.2 * kDetFDriftCaseA;
  return {ok, fmt("detF_max_err t=0 %.1e, t=0.1 %.4e (frozen %.4e +-20%%)", at0, at_end, kDetFDriftCaseA)};
}

Outcome determinism(const fs::path& scratch) {
  for (const char* sub : {"det1", "det2"}) {
    RunConfig cfg;
    cfg.case_name = "A";
    cfg.t_end = 0.1;
    cfg.out_dir = scratch / sub;
    cfg.emit = parse_emit("all");
    cfg.sampler.seed = 1234;
    std::ostringstream log;
    if (run(cfg, log) != kExitOk) return {false, "run failed: " + log.str()};
  }
  int files = 0, differing = 0;
  for (const auto& e : fs::directory_iterator(scratch / "det1")) {
    if (e.path().extension() != ".csv") continue;
    ++files;
    if (slurp(e.path()) != slurp(scratch / "det2" / e.path().filename())) ++differing;
  }
  return {files > 0 && differing == 0, fmt("%.0f CSV files compared, %.0f differ", files, differing)};
}

}  // namespace

int main() {
  const fs::path scratch = fs::temp_directory_path() / "nsch_acceptance";
  fs::remove_all(scratch);
  fs::create_directories(scratch);

  criterion("operator-convergence", 5, operator_convergence);
  criterion("solver-round-trips", 5, solver_round_trips);
  criterion("projection", 1, projection);
  criterion("mass-conservation", 60, mass_conservation);
  criterion("energy-dissipation", 180, energy_dissipation);
  criterion("variation-duality", 10, variation_duality);
  criterion("caseB-width-ordering", 180, case_b_ordering);
  criterion("caseC-midpoint-polarization", 300, case_c_polarization);
  criterion("caseD-mixed-energy-ordering", 1, case_d_energy);
  criterion("sampler-fidelity", 30, sampler_fidelity);
  criterion("detF-monitoring", 60, [&] { return det_f_monitoring(scratch); });
  criterion("determinism", 120, [&] { return determinism(scratch); });

  fs::remove_all(scratch);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
