#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsch/cases.hpp"
#include "nsch/sampler.hpp"
#include "nsch/stepper.hpp"

namespace nsch {

// Process exit codes of the driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnknownCase = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitSolver = 4;

struct EmitFlags {
  bool energy = true;
  bool metrics = true;
  bool sections = false;
  bool snapshots = false;
  bool samples = false;
};

/// Parses a comma list such as "energy,metrics,sections"; "all" and "none"
/// are accepted. Throws std::invalid_argument on unknown names.
EmitFlags parse_emit(const std::string& list);

struct RunConfig {
  std::string case_name = "A";
  /// key = value overrides applied on top of the case, in order.
  std::vector<std::pair<std::string, std::string>> overrides;
  int nx = 64;
  int ny = 32;
  std::optional<double> t_end;
  std::optional<double> output_dt;  ///< default: the case's window_dt
  std::filesystem::path out_dir = "out";
  EmitFlags emit;
  StepConfig step;
  SamplerConfig sampler;
};

/// Reads a flat `key = value` file ('#' starts a comment). A `case` key is
/// applied first; every other key is validated and queued as an override.
void load_config_file(const std::filesystem::path& path, RunConfig& cfg);

/// Applies one setting; run-level keys (nx, t_end, seed, sampler.n, ...)
/// go straight into cfg, physical parameters are queued as overrides.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// The case named in cfg with all overrides applied and validated.
CaseSpec resolve_case(const RunConfig& cfg);

/// Full simulation run writing CSV/snapshot output under cfg.out_dir and a
/// one-line summary to `log`. Returns one of the kExit* codes.
int run(const RunConfig& cfg, std::ostream& log);

/// Case table (one row per registered case).
void list_cases(std::ostream& out);

/// Samples the energy density of a phi snapshot (F components are read
/// from sibling files `<stem minus "phi">F11.bin` ... when present, else
/// F = I). Writes x,y,density_value rows to out_csv.
int sample(const RunConfig& cfg, const std::filesystem::path& snapshot, const std::filesystem::path& out_csv,
           std::ostream& log);

}  // namespace nsch
