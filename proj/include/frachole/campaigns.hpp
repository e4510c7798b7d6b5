#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "frachole/minmax.hpp"

namespace frachole {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validated run configuration. Unknown keys anywhere in the JSON are a
/// ConfigError; CLI overrides use --block.key=value.
struct Config {
  GridSpec grid;
  ProblemParams problem;
  int snapshot_every = 0;
  std::vector<std::string> campaigns;
  std::filesystem::path out_dir = "out";
  // campaign knobs; empty = derive defaults from the base geometry
  std::vector<double> cutoff_r_values;
  std::vector<double> cutoff_rho_values;
  std::vector<double> schedule_distances;
  std::vector<double> solve_r_values;
};

Config load_config(const std::filesystem::path& path,
                   const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Executes the selected campaigns, writing one JSON summary plus CSV tables
/// per campaign into out_dir. Returns 0 when every campaign's acceptance
/// predicate holds, 1 otherwise (a machine-readable failure record is written
/// either way).
int run_campaigns(const Config& cfg);

/// Consolidates campaign artifacts in out_dir into summary.json and
/// summary.txt. Returns 0 on overall pass, 1 otherwise; throws on missing
/// artifacts.
int write_report(const std::filesystem::path& out_dir);

}  // namespace frachole
