#include "nsch/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nsch/csv.hpp"
#include "nsch/diagnostics.hpp"
#include "nsch/energy.hpp"
#include "nsch/errors.hpp"
#include "nsch/operators.hpp"
#include "nsch/snapshot.hpp"

namespace nsch {
namespace fs = std::filesystem;

namespace {

std::string trim(std::string s) {
  const auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), issp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), issp).base(), s.end());
  return s;
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw std::invalid_argument("setting " + key + ": not a number: '" + value + "'");
  return v;
}

std::int64_t to_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw std::invalid_argument("setting " + key + ": not an integer: '" + value + "'");
  return v;
}

double* param_slot(Params& p, const std::string& key) {
  static const std::map<std::string, double Params::*> slots = {
      {"eta_b", &Params::eta_b},   {"eta_t", &Params::eta_t}, {"kappa_b", &Params::kappa_b},
      {"kappa_t", &Params::kappa_t}, {"nu_b", &Params::nu_b}, {"nu_t", &Params::nu_t},
      {"lambda", &Params::lambda}, {"gamma", &Params::gamma}, {"tau", &Params::tau},
      {"h", &Params::h},           {"k", &Params::k},         {"rho", &Params::rho}};
  const auto it = slots.find(key);
  return it == slots.end() ? nullptr : &(p.*(it->second));
}

std::string time_label(double t) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << t;
  return os.str();
}

}  // namespace

EmitFlags parse_emit(const std::string& list) {
  EmitFlags e{false, false, false, false, false};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (item == "all") {
      e = {true, true, true, true, true};
    } else if (item == "none") {
      e = {false, false, false, false, false};
    } else if (item == "energy") {
      e.energy = true;
    } else if (item == "metrics") {
      e.metrics = true;
    } else if (item == "sections") {
      e.sections = true;
    } else if (item == "snapshots") {
      e.snapshots = true;
    } else if (item == "samples") {
      e.samples = true;
    } else {
      throw std::invalid_argument("unknown emit flag '" + item + "'");
    }
  }
  return e;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "case") {
    cfg.case_name = value;
  } else if (key == "nx") {
    cfg.nx = static_cast<int>(to_int(key, value));
  } else if (key == "ny") {
    cfg.ny = static_cast<int>(to_int(key, value));
  } else if (key == "t_end") {
    cfg.t_end = to_double(key, value);
  } else if (key == "output_dt") {
    cfg.output_dt = to_double(key, value);
  } else if (key == "out_dir") {
    cfg.out_dir = value;
  } else if (key == "emit") {
    cfg.emit = parse_emit(value);
  } else if (key == "seed" || key == "sampler.seed") {
    cfg.sampler.seed = static_cast<std::uint64_t>(to_int(key, value));
  } else if (key == "dt_max") {
    cfg.step.dt_max = to_double(key, value);
  } else if (key == "stab_s") {
    cfg.step.stab_s = to_double(key, value);
  } else if (key == "visc_split") {
    cfg.step.visc_split = to_double(key, value);
  } else if (key == "cfl_safety") {
    cfg.step.cfl_safety = to_double(key, value);
  } else if (key == "sampler.n") {
    cfg.sampler.n_samples = to_int(key, value);
  } else if (key == "sampler.burn_in" || key == "sampler.burn-in") {
    cfg.sampler.burn_in = to_int(key, value);
  } else if (key == "sampler.proposal_std" || key == "sampler.proposal-std") {
    cfg.sampler.proposal_std = to_double(key, value);
  } else if (key == "sampler.floor_frac" || key == "sampler.floor-frac") {
    cfg.sampler.floor_frac = to_double(key, value);
  } else {
    Params probe;
    if (!param_slot(probe, key)) throw std::invalid_argument("unknown setting '" + key + "'");
    to_double(key, value);
    cfg.overrides.emplace_back(key, value);
  }
}

void load_config_file(const fs::path& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path.string());
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    }
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  for (const auto& [k, v] : entries) {
    if (k == "case") apply_setting(cfg, k, v);
  }
  for (const auto& [k, v] : entries) {
    if (k != "case") apply_setting(cfg, k, v);
  }
}

CaseSpec resolve_case(const RunConfig& cfg) {
  CaseSpec spec = case_params(cfg.case_name);
  for (const auto& [key, value] : cfg.overrides) *param_slot(spec.params, key) = to_double(key, value);
  spec.params.validate();
  if (cfg.t_end) spec.t_end = *cfg.t_end;
  if (cfg.output_dt) spec.window_dt = *cfg.output_dt;
  if (!(spec.t_end >= 0.0)) throw std::invalid_argument("t_end must be >= 0");
  if (!(spec.window_dt > 0.0)) throw std::invalid_argument("output cadence must be positive");
  return spec;
}

namespace {

class Outputs {
 public:
  Outputs(const RunConfig& cfg, const Params& params, const State& initial)
      : cfg_(cfg), params_(params), initial_(initial) {
    if (cfg.emit.energy) {
      energy_ = std::make_unique<CsvWriter>(
          cfg.out_dir / "energy.csv",
          std::initializer_list<std::string_view>{"t", "E_total", "E_k", "E_m", "E_e", "D_visc", "D_mu",
                                                  "D_Fdiff", "D_friction", "dE_dt_est"});
    }
    if (cfg.emit.metrics) {
      metrics_ = std::make_unique<CsvWriter>(
          cfg.out_dir / "metrics.csv",
          std::initializer_list<std::string_view>{"t", "mean_phi", "mean_phi_drift", "div_u_norm", "detF_max_err",
                                                  "phi_min", "phi_max", "interface_width", "linf_vs_init",
                                                  "linf_vs_init_full"});
    }
  }

  void energy(const EnergyReport& r) {
    if (!energy_) return;
    energy_->row({r.t, r.E_total, r.E_kinetic, r.E_mixed, r.E_elastic, r.D_visc, r.D_mu, r.D_Fdiff, r.D_friction,
                  r.dE_dt_est});
  }

  // Returns the metrics row so the caller can track drift.
  MetricsRow cadence(const State& s) {
    const MetricsRow m = metrics(s, initial_);
    if (metrics_) {
      metrics_->row({m.t, m.mean_phi, m.mean_phi_drift, m.div_u_norm, m.detF_max_err, m.phi_min, m.phi_max,
                     m.interface_width, m.linf_vs_init, m.linf_vs_init_full});
    }
    const std::string label = time_label(s.t);
    if (cfg_.emit.sections) {
      const Profile p = axial_section(s.phi);
      CsvWriter w(cfg_.out_dir / ("section_t" + label + ".csv"), {"x", "phi"});
      for (std::size_t i = 0; i < p.x.size(); ++i) w.row({p.x[i], p.value[i]});
    }
    if (cfg_.emit.snapshots) {
      const std::string prefix = "snap_t" + label + "_";
      write_snapshot(cfg_.out_dir / (prefix + "phi.bin"), s.phi, s.t);
      write_snapshot(cfg_.out_dir / (prefix + "p.bin"), s.p, s.t);
      write_snapshot(cfg_.out_dir / (prefix + "u1.bin"), s.u.x, s.t);
      write_snapshot(cfg_.out_dir / (prefix + "u2.bin"), s.u.y, s.t);
      write_snapshot(cfg_.out_dir / (prefix + "F11.bin"), s.F.c11, s.t);
      write_snapshot(cfg_.out_dir / (prefix + "F12.bin"), s.F.c12, s.t);
      write_snapshot(cfg_.out_dir / (prefix + "F21.bin"), s.F.c21, s.t);
      write_snapshot(cfg_.out_dir / (prefix + "F22.bin"), s.F.c22, s.t);
    }
    if (cfg_.emit.samples) {
      const SampleSet set = sample_state(s, params_, cfg_.sampler);
      CsvWriter w(cfg_.out_dir / ("samples_t" + label + ".csv"), {"x", "y", "density_value"});
      for (const auto& pt : set.points) w.row({pt.x, pt.y, pt.density_value});
    }
    return m;
  }

 private:
  const RunConfig& cfg_;
  const Params& params_;
  const State& initial_;
  std::unique_ptr<CsvWriter> energy_;
  std::unique_ptr<CsvWriter> metrics_;
};

}  // namespace

int run(const RunConfig& cfg, std::ostream& log) {
  CaseSpec spec;
  try {
    spec = resolve_case(cfg);
    cfg.step.validate();
    cfg.sampler.validate();
  } catch (const UnknownCaseError& e) {
    log << "error: " << e.what() << '\n';
    return kExitUnknownCase;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Grid grid;
  try {
    grid = default_grid(cfg.nx, cfg.ny);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec || !fs::is_directory(cfg.out_dir)) {
    log << "error: cannot create output directory " << cfg.out_dir << '\n';
    return kExitIo;
  }

  const auto wall_start = std::chrono::steady_clock::now();
  const State initial = init_state(spec, grid);
  State state = initial;
  const Params& params = spec.params;

  std::unique_ptr<Outputs> out;
  try {
    out = std::make_unique<Outputs>(cfg, params, initial);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }

  double max_drift = 0.0;
  EnergyReport prev_energy;
  try {
    prev_energy = energy_report(state, params);
    out->energy(prev_energy);
    max_drift = std::max(max_drift, out->cadence(state).mean_phi_drift);

    const double t_end = spec.t_end;
    const double cadence = spec.window_dt;
    std::int64_t next_output = 1;
    StepConfig step_cfg = cfg.step;
    constexpr double kTimeSlack = 1e-12;
    while (state.t < t_end - kTimeSlack) {
      const double target = std::min(next_output * cadence, t_end);
      double dt = cfl_dt(state, params, step_cfg);
      if (state.t + dt > target - kTimeSlack) dt = target - state.t;
      step_cfg.dt = dt;
      state = step(state, params, step_cfg);
      if (std::abs(state.t - target) <= kTimeSlack) state.t = target;

      EnergyReport now = energy_report(state, params);
      ledger_append(prev_energy, now);
      out->energy(now);
      prev_energy = now;

      const bool at_cadence = std::abs(state.t - next_output * cadence) <= kTimeSlack;
      const bool at_end = state.t >= t_end - kTimeSlack;
      if (at_cadence) ++next_output;
      if (at_cadence || at_end) max_drift = std::max(max_drift, out->cadence(state).mean_phi_drift);
    }
  } catch (const SolverError& e) {
    log << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::runtime_error& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  log << "case " << spec.name << " steps=" << state.steps << " t=" << format_number(state.t)
      << " wall=" << std::fixed << std::setprecision(3) << wall << "s" << std::defaultfloat
      << " E=" << format_number(prev_energy.E_total) << " max_mass_drift=" << format_number(max_drift) << '\n';
  return kExitOk;
}

void list_cases(std::ostream& out) {
  out << "case,description,eta_b,eta_t,kappa_b,kappa_t,nu_b,nu_t,h,gamma,tau,lambda,phi0,aa_sampling,t_end\n";
  for (const auto& c : all_cases()) {
    const Params& p = c.params;
    out << c.name << ',' << c.description;
    for (double v : {p.eta_b, p.eta_t, p.kappa_b, p.kappa_t, p.nu_b, p.nu_t, p.h, p.gamma, p.tau, p.lambda}) {
      out << ',' << format_number(v);
    }
    out << ',' << (c.phi0_kind == InitialShape::single ? "single" : "two") << ','
        << (c.aa_sampling ? "yes" : "no") << ',' << format_number(c.t_end) << '\n';
  }
}

int sample(const RunConfig& cfg, const fs::path& snapshot, const fs::path& out_csv, std::ostream& log) {
  CaseSpec spec;
  try {
    spec = resolve_case(cfg);
    cfg.sampler.validate();
  } catch (const UnknownCaseError& e) {
    log << "error: " << e.what() << '\n';
    return kExitUnknownCase;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  State state;
  try {
    Snapshot phi = read_snapshot(snapshot);
    const Grid& g = phi.field.grid();
    state.t = phi.t;
    state.phi = std::move(phi.field);
    state.u = VectorField2(g, Boundary::dirichlet_zero);
    state.p = ScalarField(g);
    state.F = TensorField2::identity(g);
    const std::string name = snapshot.filename().string();
    const std::string suffix = "phi.bin";
    if (name.size() >= suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      const std::string prefix = name.substr(0, name.size() - suffix.size());
      const char* comps[] = {"F11", "F12", "F21", "F22"};
      ScalarField* slots[] = {&state.F.c11, &state.F.c12, &state.F.c21, &state.F.c22};
      for (int c = 0; c < 4; ++c) {
        const fs::path p = snapshot.parent_path() / (prefix + comps[c] + ".bin");
        if (!fs::exists(p)) continue;
        Snapshot s = read_snapshot(p);
        if (!(s.field.grid() == g)) throw std::runtime_error("F snapshot grid differs from phi: " + p.string());
        *slots[c] = std::move(s.field);
      }
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }

  try {
    if (out_csv.has_parent_path()) fs::create_directories(out_csv.parent_path());
    const SampleSet set = sample_state(state, spec.params, cfg.sampler);
    CsvWriter w(out_csv, {"x", "y", "density_value"});
    for (const auto& pt : set.points) w.row({pt.x, pt.y, pt.density_value});
    log << "samples=" << set.points.size() << " acceptance=" << format_number(set.acceptance_rate) << '\n';
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace nsch
