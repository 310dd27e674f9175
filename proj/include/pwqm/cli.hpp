#ifndef PWQM_CLI_HPP
#define PWQM_CLI_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pwqm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailure = 2;

inline constexpr double kHartreeToEv = 27.211386245988;

/// One run: problem selection, potential preset, grid and physics
/// parameters, requested artifacts. For hydrogen-radial the grid fields
/// are (1, n_grid, r_max).
struct RunConfig {
  std::string problem = "schrodinger";  // schrodinger | dirac | hydrogen-radial
  std::string potential;                // "name" or "name:key=val,key=val"
  int grid_dim = 1;
  int grid_n = 128;
  double grid_extent = 20.0;
  double mass = 1.0;
  double charge = -1.0;
  double light_speed = 137.035999084;
  int count = 5;
  std::vector<std::string> outputs = {"report-json"};
  std::string outdir = ".";
  long seed = 0;
  bool analytic = false;          // momdist: feed the exact ground state
  double tamper_energy = 0.0;     // verify: shift energy tags (self-test)
  std::string states_file;        // verify: load a prior states-csv artifact
};

/// Optional overrides collected from command-line flags; set fields win
/// over the config file.
struct FlagOverrides {
  std::optional<std::string> problem, potential, grid, outdir, states_file;
  std::optional<double> mass, charge, light_speed, tamper_energy;
  std::optional<int> count;
  std::optional<long> seed;
  std::optional<bool> analytic;
  std::optional<std::vector<std::string>> outputs;
};

/// Default radial window for hydrogen-radial runs when the user sets no
/// grid; momdist narrows it to r_max = 20 for transform resolution.
struct RadialDefaults {
  int n_grid = 2048;
  double r_max = 40.0;
};

/// Fills problem-dependent defaults (grid, potential) for fields the user
/// did not set, then validates ranges. Throws std::invalid_argument with
/// the offending key in the message.
RunConfig resolve_config(const std::optional<std::string>& config_path,
                         const FlagOverrides& flags,
                         const RadialDefaults& radial = {});

/// "harmonic:omega=1" -> ("harmonic", {omega: 1}).
std::pair<std::string, std::map<std::string, double>> parse_potential_spec(
    const std::string& spec);

/// "1,128,20" -> (1, 128, 20.0).
std::tuple<int, int, double> parse_grid_spec(const std::string& spec);

int cmd_solve(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_momdist(const RunConfig& config);
int cmd_demo(const RunConfig& config);

}  // namespace pwqm::cli

#endif
