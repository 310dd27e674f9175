#include "pwqm/cli.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pwqm/basis.hpp"
#include "pwqm/constants.hpp"
#include "pwqm/dirac.hpp"
#include "pwqm/momentum.hpp"
#include "pwqm/schrodinger.hpp"
#include "pwqm/verify.hpp"

namespace pwqm::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.outdir);
  const auto path = std::filesystem::path(cfg.outdir) / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path.string());
  return out;
}

bool wants(const RunConfig& cfg, const std::string& artifact) {
  for (const auto& o : cfg.outputs)
    if (o == artifact) return true;
  return false;
}

// ---------------------------------------------------------------------------
// config handling

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot read file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: " + path + " is not valid JSON (" +
                                e.what() + ")");
  }
  return j;
}

void merge_file(FlagOverrides& dst, const json& j) {
  auto set_if = [&j](auto& slot, const char* key) {
    if (j.contains(key))
      slot = j.at(key).get<typename std::decay_t<decltype(slot)>::value_type>();
  };
  set_if(dst.problem, "problem");
  set_if(dst.potential, "potential");
  set_if(dst.grid, "grid");
  set_if(dst.outdir, "outdir");
  set_if(dst.states_file, "states");
  set_if(dst.mass, "mass");
  set_if(dst.charge, "charge");
  set_if(dst.light_speed, "c");
  set_if(dst.tamper_energy, "tamper_energy");
  set_if(dst.count, "count");
  set_if(dst.seed, "seed");
  set_if(dst.analytic, "analytic");
  set_if(dst.outputs, "outputs");
}

void merge_flags(FlagOverrides& dst, const FlagOverrides& src) {
  auto take = [](auto& slot, const auto& other) {
    if (other.has_value()) slot = other;
  };
  take(dst.problem, src.problem);
  take(dst.potential, src.potential);
  take(dst.grid, src.grid);
  take(dst.outdir, src.outdir);
  take(dst.states_file, src.states_file);
  take(dst.mass, src.mass);
  take(dst.charge, src.charge);
  take(dst.light_speed, src.light_speed);
  take(dst.tamper_energy, src.tamper_energy);
  take(dst.count, src.count);
  take(dst.seed, src.seed);
  take(dst.analytic, src.analytic);
  take(dst.outputs, src.outputs);
}

}  // namespace

std::pair<std::string, std::map<std::string, double>> parse_potential_spec(
    const std::string& spec) {
  const auto colon = spec.find(':');
  std::map<std::string, double> params;
  if (colon == std::string::npos) return {spec, params};
  const std::string name = spec.substr(0, colon);
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("potential: expected key=value in '" + item +
                                  "'");
    try {
      params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("potential: bad numeric value in '" + item +
                                  "'");
    }
  }
  return {name, params};
}

std::tuple<int, int, double> parse_grid_spec(const std::string& spec) {
  int dim = 0, n = 0;
  double extent = 0.0;
  char c1 = 0, c2 = 0;
  std::stringstream ss(spec);
  if (!(ss >> dim >> c1 >> n >> c2 >> extent) || c1 != ',' || c2 != ',')
    throw std::invalid_argument("grid: expected 'dim,n,extent', got '" + spec +
                                "'");
  return {dim, n, extent};
}

RunConfig resolve_config(const std::optional<std::string>& config_path,
                         const FlagOverrides& flags,
                         const RadialDefaults& radial) {
  FlagOverrides merged;
  if (config_path) merge_file(merged, load_json_file(*config_path));
  merge_flags(merged, flags);  // flags win on conflict

  RunConfig cfg;
  cfg.problem = merged.problem.value_or(cfg.problem);
  if (cfg.problem != "schrodinger" && cfg.problem != "dirac" &&
      cfg.problem != "hydrogen-radial")
    throw std::invalid_argument(
        "problem: must be schrodinger, dirac or hydrogen-radial, got '" +
        cfg.problem + "'");

  // per-problem defaults for fields the user did not set
  if (cfg.problem == "hydrogen-radial") {
    cfg.potential = "coulomb-radial";
    cfg.grid_n = radial.n_grid;
    cfg.grid_extent = radial.r_max;
    cfg.count = 1;
  } else if (cfg.problem == "dirac") {
    cfg.potential = "dirac-free";
    cfg.count = 4;
  } else {
    cfg.potential = "harmonic:omega=1";
  }

  if (merged.potential) cfg.potential = *merged.potential;
  if (merged.grid) {
    std::tie(cfg.grid_dim, cfg.grid_n, cfg.grid_extent) =
        parse_grid_spec(*merged.grid);
  }
  cfg.mass = merged.mass.value_or(cfg.mass);
  cfg.charge = merged.charge.value_or(cfg.charge);
  cfg.light_speed = merged.light_speed.value_or(cfg.light_speed);
  cfg.count = merged.count.value_or(cfg.count);
  cfg.outdir = merged.outdir.value_or(cfg.outdir);
  cfg.states_file = merged.states_file.value_or(cfg.states_file);
  cfg.seed = merged.seed.value_or(cfg.seed);
  cfg.analytic = merged.analytic.value_or(cfg.analytic);
  cfg.tamper_energy = merged.tamper_energy.value_or(cfg.tamper_energy);
  if (merged.outputs) cfg.outputs = *merged.outputs;

  if (cfg.problem == "hydrogen-radial") {
    if (cfg.grid_dim != 1)
      throw std::invalid_argument("grid: hydrogen-radial requires dim 1");
    if (cfg.potential != "coulomb-radial")
      throw std::invalid_argument(
          "potential: hydrogen-radial always uses coulomb-radial");
  }
  if (cfg.problem == "dirac" && cfg.grid_dim != 1)
    throw std::invalid_argument("grid: dirac requires dim 1");
  if (!(cfg.mass > 0.0)) throw std::invalid_argument("mass: must be > 0");
  if (!(cfg.light_speed > 0.0)) throw std::invalid_argument("c: must be > 0");
  if (cfg.count < 1) throw std::invalid_argument("count: must be >= 1");
  return cfg;
}

namespace {

json config_echo(const RunConfig& cfg) {
  return json{{"problem", cfg.problem},
              {"potential", cfg.potential},
              {"grid", {{"dim", cfg.grid_dim}, {"n", cfg.grid_n},
                        {"extent", cfg.grid_extent}}},
              {"mass", cfg.mass},
              {"charge", cfg.charge},
              {"c", cfg.light_speed},
              {"count", cfg.count},
              {"outputs", cfg.outputs},
              {"outdir", cfg.outdir},
              {"seed", cfg.seed},
              {"analytic", cfg.analytic}};
}

json dominant_modes_json(const UniformGrid& grid,
                         const SpectralAmplitudes& amps) {
  std::vector<std::size_t> order(grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::norm(amps.values[a]) > std::norm(amps.values[b]);
  });
  json out = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(5, order.size()); ++i) {
    const auto m = grid.unflatten(order[i]);
    json k = json::array();
    for (int d = 0; d < grid.dim(); ++d) k.push_back(m[d] - grid.n() / 2);
    out.push_back({{"k", k},
                   {"p", std::sqrt(grid.momentum_sq(order[i]))},
                   {"weight", std::norm(amps.values[order[i]])}});
  }
  return out;
}

json dominant_modes_json(const UniformGrid& grid, const Eigen::VectorXd& w) {
  std::vector<int> order(grid.n());
  for (int i = 0; i < grid.n(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  json out = json::array();
  for (int i = 0; i < std::min(5, grid.n()); ++i) {
    out.push_back({{"k", json::array({order[i] - grid.n() / 2})},
                   {"p", std::abs(grid.axis_momentum(order[i]))},
                   {"weight", w[order[i]]}});
  }
  return out;
}

struct StateChecks {
  bool passed = true;
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

// ---------------------------------------------------------------------------
// artifact writers

void write_states_csv(const RunConfig& cfg, const EigenSolution& sol) {
  auto out = open_output(cfg, "states.csv");
  const UniformGrid& grid = sol.grid;
  if (grid.dim() == 1)
    out << "state,energy,index,x,re,im\n";
  else
    out << "state,energy,index,x,y,z,re,im\n";
  for (int s = 0; s < sol.count; ++s) {
    const WaveFunction& psi = sol.states[s];
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto j = grid.unflatten(i);
      out << s << ',' << g17(sol.energies[s]) << ',' << i;
      for (int d = 0; d < grid.dim(); ++d)
        out << ',' << g17(grid.axis_position(j[d]));
      out << ',' << g17(psi.values[i].real()) << ','
          << g17(psi.values[i].imag()) << '\n';
    }
  }
}

void write_states_csv(const RunConfig& cfg, const DiracSolution& sol) {
  auto out = open_output(cfg, "states.csv");
  out << "state,energy,index,component,x,re,im\n";
  for (std::size_t s = 0; s < sol.states.size(); ++s) {
    const SpinorField& psi = sol.states[s];
    for (int j = 0; j < sol.grid.n(); ++j)
      for (int comp = 0; comp < 4; ++comp)
        out << s << ',' << g17(sol.energies[s]) << ',' << j << ',' << comp
            << ',' << g17(sol.grid.axis_position(j)) << ','
            << g17(psi.values[4 * j + comp].real()) << ','
            << g17(psi.values[4 * j + comp].imag()) << '\n';
  }
}

void write_amplitudes_csv(const RunConfig& cfg, const EigenSolution& sol) {
  auto out = open_output(cfg, "amplitudes.csv");
  const UniformGrid& grid = sol.grid;
  if (grid.dim() == 1)
    out << "state,k,p,re,im,weight\n";
  else
    out << "state,k1,k2,k3,px,py,pz,re,im,weight\n";
  for (int s = 0; s < sol.count; ++s) {
    const SpectralAmplitudes a = forward_transform(sol.states[s]);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto m = grid.unflatten(i);
      out << s;
      for (int d = 0; d < grid.dim(); ++d) out << ',' << (m[d] - grid.n() / 2);
      for (int d = 0; d < grid.dim(); ++d)
        out << ',' << g17(grid.axis_momentum(m[d]));
      out << ',' << g17(a.values[i].real()) << ',' << g17(a.values[i].imag())
          << ',' << g17(std::norm(a.values[i])) << '\n';
    }
  }
}

void write_momdist_csv(const RunConfig& cfg, const MomentumDistribution& dist) {
  auto out = open_output(cfg, "momdist.csv");
  out << "p,amplitude,density,closed_form,rel_error\n";
  for (Eigen::Index i = 0; i < dist.momenta.size(); ++i) {
    const double p = dist.momenta[i];
    const double closed = hydrogen_a0_closed_form(p, 1.0);
    const double rel = std::abs(dist.amplitude[i] - closed) / closed;
    out << g17(p) << ',' << g17(dist.amplitude[i]) << ',' << g17(dist.density[i])
        << ',' << g17(closed) << ',' << g17(rel) << '\n';
  }
}

// ---------------------------------------------------------------------------
// states-csv loader (verify --states)

std::vector<WaveFunction> load_states_csv(const std::string& path,
                                          const UniformGrid& grid) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("states: cannot read file " + path);
  std::string header;
  if (!std::getline(in, header) || header.rfind("state,energy,index", 0) != 0)
    throw std::invalid_argument("states: " + path +
                                " is not a states-csv artifact");
  std::vector<WaveFunction> states;
  std::string line;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() < 6)
      throw std::invalid_argument("states: corrupt row " + std::to_string(row) +
                                  " in " + path);
    try {
      const std::size_t s = std::stoul(fields[0]);
      const double energy = std::stod(fields[1]);
      const std::size_t idx = std::stoul(fields[2]);
      const double re = std::stod(fields[fields.size() - 2]);
      const double im = std::stod(fields[fields.size() - 1]);
      while (states.size() <= s) {
        states.push_back(WaveFunction{grid, Representation::Position,
                                      Eigen::VectorXcd::Zero(grid.size()),
                                      std::nullopt});
      }
      if (idx >= grid.size())
        throw std::invalid_argument("grid index out of range");
      states[s].values[idx] = {re, im};
      states[s].energy = energy;
    } catch (const std::exception& e) {
      throw std::invalid_argument("states: corrupt row " + std::to_string(row) +
                                  " in " + path + " (" + e.what() + ")");
    }
  }
  if (states.empty())
    throw std::invalid_argument("states: no states found in " + path);
  return states;
}

// ---------------------------------------------------------------------------
// per-problem report assembly

struct RunResult {
  json states = json::array();
  bool checks_passed = true;
  double solve_seconds = 0.0;
};

RunResult run_scalar_problem(const RunConfig& cfg, EigenSolution& sol,
                             const PotentialField& pot) {
  RunResult res;
  for (int s = 0; s < sol.count; ++s) {
    WaveFunction& psi = sol.states[s];
    if (cfg.tamper_energy != 0.0)
      psi.energy = *psi.energy + cfg.tamper_energy;
    const EnergyBreakdown eb = energy_breakdown(psi, pot, sol.mass);
    const ResidualReport rr = pointwise_residual(psi, pot, sol.mass);
    const SpectralAmplitudes amps = forward_transform(psi);
    const double tol = residual_tolerance(*psi.energy);

    StateChecks checks;
    checks.require(eb.relation_residual < tol, "relation_residual");
    checks.require(rr.pointwise_l2 < tol, "pointwise_l2");
    res.checks_passed = res.checks_passed && checks.passed;

    res.states.push_back(
        {{"index", s},
         {"energy_hartree", *psi.energy},
         {"energy_ev", *psi.energy * kHartreeToEv},
         {"kinetic_avg", eb.kinetic_avg},
         {"potential_avg", eb.potential_avg},
         {"total_avg", eb.total_avg},
         {"relation_residual", eb.relation_residual},
         {"pointwise_max", rr.pointwise_max},
         {"pointwise_l2", rr.pointwise_l2},
         {"averaged_residual", rr.averaged_residual},
         {"residual_tolerance", tol},
         {"checks_passed", checks.passed},
         {"failed_checks", checks.failures},
         {"dominant_modes", dominant_modes_json(sol.grid, amps)}});
  }
  return res;
}

RunResult run_dirac_problem(const RunConfig& cfg, DiracSolution& sol,
                            const EMPotentialField& pot) {
  RunResult res;
  const double mc2 = cfg.mass * cfg.light_speed * cfg.light_speed;
  for (std::size_t s = 0; s < sol.states.size(); ++s) {
    SpinorField& psi = sol.states[s];
    if (cfg.tamper_energy != 0.0)
      psi.energy = *psi.energy + cfg.tamper_energy;
    const ResidualReport rr = theta_residual(psi, pot, cfg.mass, cfg.light_speed);
    const double linear =
        averaged_linear_relation(psi, pot, cfg.mass, cfg.light_speed);
    const EnergyBreakdown eb =
        dirac_energy_breakdown(psi, pot, cfg.mass, cfg.light_speed);
    const double tol = 1e-8 * mc2;

    StateChecks checks;
    checks.require(rr.pointwise_l2 < tol, "theta_pointwise_l2");
    checks.require(linear < tol, "averaged_linear_relation");
    checks.require(eb.relation_residual < residual_tolerance(eb.total_avg),
                   "relation_residual");
    res.checks_passed = res.checks_passed && checks.passed;

    const double e = *psi.energy;
    res.states.push_back(
        {{"index", s},
         {"energy_hartree", e},
         {"energy_ev", e * kHartreeToEv},
         {"kinetic_avg", eb.kinetic_avg},
         {"potential_avg", eb.potential_avg},
         {"total_avg", eb.total_avg},
         {"relation_residual", eb.relation_residual},
         {"pointwise_max", rr.pointwise_max},
         {"pointwise_l2", rr.pointwise_l2},
         {"averaged_residual", rr.averaged_residual},
         {"averaged_linear_residual", linear},
         {"residual_tolerance", tol},
         {"checks_passed", checks.passed},
         {"failed_checks", checks.failures},
         {"branch", e >= 0.0 ? "positive" : "negative"},
         {"binding_energy", mc2 - e},
         {"dominant_modes",
          dominant_modes_json(sol.grid, spinor_mode_weights(psi))}});
  }
  return res;
}

void write_report(const RunConfig& cfg, const RunResult& res, double total_s) {
  if (!wants(cfg, "report-json")) return;
  json report{{"version", kVersion},
              {"problem", cfg.problem},
              {"config", config_echo(cfg)},
              {"states", res.states},
              {"checks_passed", res.checks_passed},
              {"timings", {{"solve_seconds", res.solve_seconds},
                           {"total_seconds", total_s}}}};
  auto out = open_output(cfg, "report.json");
  out << report.dump(2) << '\n';
}

void print_state_summary(const RunResult& res) {
  for (const auto& st : res.states) {
    std::cout << "state " << st["index"] << ": E = "
              << g17(st["energy_hartree"].get<double>()) << " hartree ("
              << g17(st["energy_ev"].get<double>()) << " eV)  relation_residual = "
              << g17(st["relation_residual"].get<double>())
              << "  pointwise_l2 = " << g17(st["pointwise_l2"].get<double>())
              << (st["checks_passed"].get<bool>() ? "  [ok]" : "  [FAIL]")
              << '\n';
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// commands

int cmd_solve(const RunConfig& cfg) {
  try {
    Timer total;
    RunResult res;
    Timer solve_timer;
    if (cfg.problem == "schrodinger") {
      const UniformGrid grid = make_grid(cfg.grid_dim, cfg.grid_n, cfg.grid_extent);
      const auto [name, params] = parse_potential_spec(cfg.potential);
      const PotentialField pot = make_potential(grid, name, params);
      EigenSolution sol = solve_eigen(pot, cfg.mass, cfg.count);
      const double solve_s = solve_timer.seconds();
      res = run_scalar_problem(cfg, sol, pot);
      res.solve_seconds = solve_s;
      if (wants(cfg, "states-csv")) write_states_csv(cfg, sol);
      if (wants(cfg, "amplitudes-csv")) write_amplitudes_csv(cfg, sol);
    } else if (cfg.problem == "hydrogen-radial") {
      EigenSolution sol =
          solve_hydrogen_radial(cfg.grid_n, cfg.grid_extent, cfg.count);
      const double solve_s = solve_timer.seconds();
      const PotentialField pot = make_potential(sol.grid, "coulomb-radial");
      res = run_scalar_problem(cfg, sol, pot);
      res.solve_seconds = solve_s;
      if (wants(cfg, "states-csv")) write_states_csv(cfg, sol);
      if (wants(cfg, "amplitudes-csv")) write_amplitudes_csv(cfg, sol);
    } else {  // dirac
      const UniformGrid grid = make_grid(cfg.grid_dim, cfg.grid_n, cfg.grid_extent);
      const auto [name, params] = parse_potential_spec(cfg.potential);
      const EMPotentialField pot =
          make_em_potential(grid, name, params, cfg.charge);
      DiracSolution sol = solve_dirac(pot, cfg.mass, cfg.light_speed, cfg.count);
      const double solve_s = solve_timer.seconds();
      res = run_dirac_problem(cfg, sol, pot);
      res.solve_seconds = solve_s;
      if (wants(cfg, "states-csv")) write_states_csv(cfg, sol);
    }
    print_state_summary(res);
    write_report(cfg, res, total.seconds());
    return res.checks_passed ? kExitOk : kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const RunConfig& cfg) {
  try {
    Timer total;
    RunResult res;
    Timer solve_timer;
    if (cfg.problem == "dirac") {
      const UniformGrid grid = make_grid(cfg.grid_dim, cfg.grid_n, cfg.grid_extent);
      const auto [name, params] = parse_potential_spec(cfg.potential);
      const EMPotentialField pot =
          make_em_potential(grid, name, params, cfg.charge);
      if (!cfg.states_file.empty())
        throw std::invalid_argument(
            "states: loading dirac spinor artifacts is not supported; verify "
            "re-solves in process");
      DiracSolution sol = solve_dirac(pot, cfg.mass, cfg.light_speed, cfg.count);
      res.solve_seconds = solve_timer.seconds();
      const double t = res.solve_seconds;
      res = run_dirac_problem(cfg, sol, pot);
      res.solve_seconds = t;
    } else {
      const PotentialField pot = [&] {
        if (cfg.problem == "hydrogen-radial") {
          // radial states live on the doubled periodic grid [-r_max, r_max)
          const UniformGrid g2 =
              make_grid(1, 2 * cfg.grid_n, 2.0 * cfg.grid_extent);
          return make_potential(g2, "coulomb-radial");
        }
        const UniformGrid grid =
            make_grid(cfg.grid_dim, cfg.grid_n, cfg.grid_extent);
        const auto [name, params] = parse_potential_spec(cfg.potential);
        return make_potential(grid, name, params);
      }();
      EigenSolution sol{pot.grid, 0, Eigen::VectorXd(), {}, cfg.mass};
      if (!cfg.states_file.empty()) {
        sol.states = load_states_csv(cfg.states_file, pot.grid);
        sol.count = static_cast<int>(sol.states.size());
        sol.energies.resize(sol.count);
        for (int s = 0; s < sol.count; ++s)
          sol.energies[s] = sol.states[s].energy.value_or(0.0);
      } else if (cfg.problem == "hydrogen-radial") {
        sol = solve_hydrogen_radial(cfg.grid_n, cfg.grid_extent, cfg.count);
      } else {
        sol = solve_eigen(pot, cfg.mass, cfg.count);
      }
      const double solve_s = solve_timer.seconds();
      res = run_scalar_problem(cfg, sol, pot);
      res.solve_seconds = solve_s;
    }
    for (const auto& st : res.states) {
      std::cout << "state " << st["index"]
                << (st["checks_passed"].get<bool>() ? ": PASS" : ": FAIL")
                << "  relation_residual = "
                << g17(st["relation_residual"].get<double>())
                << "  pointwise_l2 = "
                << g17(st["pointwise_l2"].get<double>()) << '\n';
    }
    write_report(cfg, res, total.seconds());
    std::cout << (res.checks_passed ? "verify: all states pass"
                                    : "verify: check failures") << '\n';
    return res.checks_passed ? kExitOk : kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_momdist(const RunConfig& cfg) {
  try {
    Timer total;
    if (cfg.problem != "hydrogen-radial")
      throw std::invalid_argument(
          "problem: momdist requires --problem hydrogen-radial");

    MomentumDistribution dist;
    double solve_seconds = 0.0;
    if (cfg.analytic) {
      dist = hydrogen_momentum_distribution_analytic();
    } else {
      Timer solve_timer;
      const EigenSolution sol =
          solve_hydrogen_radial(cfg.grid_n, cfg.grid_extent, 1);
      solve_seconds = solve_timer.seconds();
      dist = hydrogen_momentum_distribution(sol.states[0]);
    }

    double max_rel = 0.0;
    for (Eigen::Index i = 0; i < dist.momenta.size(); ++i) {
      if (dist.momenta[i] > 5.0) continue;
      const double closed = hydrogen_a0_closed_form(dist.momenta[i], 1.0);
      max_rel = std::max(max_rel, std::abs(dist.amplitude[i] - closed) / closed);
    }
    write_momdist_csv(cfg, dist);

    const bool pass = max_rel < 1e-3;
    std::cout << "momdist: max rel error vs closed form (p <= 5) = "
              << g17(max_rel) << ", normalization = "
              << g17(dist.normalization_check)
              << (pass ? "  [ok]" : "  [FAIL]") << '\n';

    if (wants(cfg, "report-json")) {
      json report{{"version", kVersion},
                  {"problem", cfg.problem},
                  {"config", config_echo(cfg)},
                  {"max_rel_error_p_le_5", max_rel},
                  {"normalization_check", dist.normalization_check},
                  {"checks_passed", pass},
                  {"timings", {{"solve_seconds", solve_seconds},
                               {"total_seconds", total.seconds()}}}};
      auto out = open_output(cfg, "report.json");
      out << report.dump(2) << '\n';
    }
    return pass ? kExitOk : kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_demo(const RunConfig& cfg) {
  try {
    bool all_pass = true;
    std::cout << "problem            quantity                 value        "
                 "reference    status\n";

    {  // particle in a box: cell 2, box width 1, walls 1e5
      const UniformGrid grid = make_grid(1, 512, 2.0);
      const PotentialField pot =
          make_potential(grid, "box", {{"width", 1.0}, {"height", 1e5}});
      const EigenSolution sol = solve_eigen(pot, 1.0, 3);
      auto out = open_output(cfg, "demo_box.csv");
      out << "n,energy,exact,rel_error,two_mode_weight,magnitude_ratio\n";
      for (int n = 1; n <= 3; ++n) {
        const double exact = n * n * std::numbers::pi * std::numbers::pi / 2.0;
        const double rel = std::abs(sol.energies[n - 1] - exact) / exact;
        const WaveFunction embedded =
            odd_periodic_embedding(sol.states[n - 1], 1.0);
        const SpectralAmplitudes amps = extract_amplitudes(embedded);
        const int kp = grid.n() / 2 + n, km = grid.n() / 2 - n;
        const double wp = std::norm(amps.values[kp]);
        const double wm = std::norm(amps.values[km]);
        const double conc = (wp + wm) / amps.values.squaredNorm();
        const double ratio = std::sqrt(wp / wm);
        out << n << ',' << g17(sol.energies[n - 1]) << ',' << g17(exact) << ','
            << g17(rel) << ',' << g17(conc) << ',' << g17(ratio) << '\n';
        const bool ok = rel < 5e-3 && conc >= 0.99 && std::abs(ratio - 1.0) < 0.01;
        all_pass = all_pass && ok;
        std::printf("box                E_%d                  %12.6f %12.6f %s\n",
                    n, sol.energies[n - 1], exact, ok ? "ok" : "FAIL");
      }
    }

    {  // harmonic oscillator
      const UniformGrid grid = make_grid(1, 128, 20.0);
      const PotentialField pot = make_potential(grid, "harmonic", {{"omega", 1.0}});
      const EigenSolution sol = solve_eigen(pot, 1.0, 10);
      auto out = open_output(cfg, "demo_harmonic.csv");
      out << "n,energy,exact,rel_error\n";
      double worst = 0.0;
      for (int n = 0; n < 10; ++n) {
        const double exact = n + 0.5;
        const double rel = std::abs(sol.energies[n] - exact) / exact;
        worst = std::max(worst, rel);
        out << n << ',' << g17(sol.energies[n]) << ',' << g17(exact) << ','
            << g17(rel) << '\n';
      }
      const bool ok = worst < 1e-8;
      all_pass = all_pass && ok;
      std::printf("harmonic           max rel err (n<=9)    %12.3e %12.1e %s\n",
                  worst, 1e-8, ok ? "ok" : "FAIL");
    }

    {  // hydrogen ground state
      const EigenSolution sol = solve_hydrogen_radial(1024, 40.0, 1);
      const double e0 = sol.energies[0];
      const double rel = std::abs(e0 + 0.5) / 0.5;
      auto out = open_output(cfg, "demo_hydrogen.csv");
      out << "quantity,value,reference,rel_error\n";
      out << "E0_hartree," << g17(e0) << ',' << g17(-0.5) << ',' << g17(rel) << '\n';
      out << "E0_ev," << g17(e0 * kHartreeToEv) << ',' << g17(-13.605693122994)
          << ',' << g17(rel) << '\n';
      const bool ok = rel < 0.01;
      all_pass = all_pass && ok;
      std::printf("hydrogen-radial    E_0                   %12.6f %12.6f %s\n",
                  e0, -0.5, ok ? "ok" : "FAIL");
    }

    {  // free dirac dispersion
      const UniformGrid grid = make_grid(1, 64, 20.0);
      const EMPotentialField pot = make_em_potential(grid, "dirac-free");
      const Eigen::VectorXd spectrum =
          dirac_spectrum(pot, cfg.mass, cfg.light_speed);
      std::vector<double> exact;
      const double mc2 = cfg.mass * cfg.light_speed * cfg.light_speed;
      for (int k = 0; k < grid.n(); ++k) {
        const double p = grid.axis_momentum(k);
        const double e = std::sqrt(p * p * cfg.light_speed * cfg.light_speed +
                                   mc2 * mc2);
        exact.push_back(e);
        exact.push_back(e);
        exact.push_back(-e);
        exact.push_back(-e);
      }
      std::sort(exact.begin(), exact.end());
      double worst = 0.0;
      auto out = open_output(cfg, "demo_dirac_free.csv");
      out << "index,energy,exact,rel_error\n";
      for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        const double rel = std::abs(spectrum[i] - exact[i]) / std::abs(exact[i]);
        worst = std::max(worst, rel);
        out << i << ',' << g17(spectrum[i]) << ',' << g17(exact[i]) << ','
            << g17(rel) << '\n';
      }
      const bool ok = worst < 1e-10;
      all_pass = all_pass && ok;
      std::printf("dirac-free         max rel err           %12.3e %12.1e %s\n",
                  worst, 1e-10, ok ? "ok" : "FAIL");
    }

    std::cout << (all_pass ? "demo: all checks pass" : "demo: FAILURES") << '\n';
    return all_pass ? kExitOk : kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pwqm::cli
