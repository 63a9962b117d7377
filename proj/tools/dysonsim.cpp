// dysonsim: simulate the projected matrix Brownian motion, the eigenvalue
// SDE, the deterministic Coulomb flow, and the sphere toy model; run
// validation suites against closed-form references.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyson/gbe.hpp"
#include "dyson/geometry.hpp"
#include "dyson/io.hpp"
#include "dyson/processes.hpp"
#include "dyson/sde.hpp"
#include "dyson/stats.hpp"

namespace fs = std::filesystem;
using namespace dyson;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

// Config file plus flag overrides; flags win. Every override is kept as a
// string so the "inf" token flows through the same parser as file values.
struct ConfigSource {
  std::string path;
  std::map<std::string, std::string> overrides;

  void attach(CLI::App* app, const std::vector<std::string>& keys) {
    app->add_option("-c,--config", path, "key=value config file");
    for (const auto& key : keys) {
      app->add_option_function<std::string>(
          "--" + key,
          [this, key](const std::string& v) { overrides[key] = v; },
          "override config key '" + key + "'");
    }
  }

  KeyValueConfig load() const {
    KeyValueConfig kv = path.empty() ? KeyValueConfig{}
                                     : KeyValueConfig::from_file(path);
    for (const auto& [k, v] : overrides) kv.set(k, v);
    return kv;
  }
};

const std::vector<std::string> kRunKeys = {
    "n",         "beta",    "t_end",      "dt",           "seed",
    "n_traj",    "workers", "delta_gap",  "record_every", "output_dir",
    "initial_spectrum"};

RealVector initial_spectrum_from(const KeyValueConfig& kv, int n) {
  if (!kv.has("initial_spectrum")) return default_initial_spectrum(n);
  std::istringstream in(kv.get_string("initial_spectrum"));
  std::vector<double> vals;
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      vals.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError("config key 'initial_spectrum': cannot parse '" + tok +
                        "'");
    }
  }
  if (static_cast<int>(vals.size()) != n) {
    throw ConfigError("config key 'initial_spectrum': expected " +
                      std::to_string(n) + " values, got " +
                      std::to_string(vals.size()));
  }
  RealVector lam(n);
  for (int j = 0; j < n; ++j) lam[j] = vals[j];
  for (int j = 0; j + 1 < n; ++j) {
    if (!(lam[j] < lam[j + 1])) {
      throw ConfigError("config key 'initial_spectrum': must be strictly "
                        "ascending");
    }
  }
  return lam;
}

fs::path prepare_output_dir(const RunConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory: " +
                  cfg.output_dir.string());
  }
  return cfg.output_dir;
}

std::string indexed_name(const std::string& stem, std::uint64_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "_%04llu.csv",
                static_cast<unsigned long long>(i));
  return stem + buf;
}

int finish_run(const RunConfig& cfg,
               const std::vector<TrajectoryRecord>& records,
               double wall_time_s,
               const std::map<std::string, std::string>& extra = {}) {
  write_manifest(cfg.output_dir / "manifest.json", cfg, records, wall_time_s,
                 extra);
  bool any_failed = false;
  for (const auto& r : records) any_failed = any_failed || !r.valid;
  return any_failed ? kExitFailure : 0;
}

template <typename Model>
int run_spectra_command(const ConfigSource& src, const Model& model_factory) {
  const KeyValueConfig kv = src.load();
  const RunConfig cfg = parse_run_config(kv);
  const RealVector lam0 = initial_spectrum_from(kv, cfg.sim.n);
  prepare_output_dir(cfg);

  const auto t0 = std::chrono::steady_clock::now();
  const auto records = model_factory(cfg, lam0);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  for (const auto& rec : records) {
    write_record_csv(cfg.output_dir / indexed_name("spectra", rec.traj_index),
                     rec);
  }
  return finish_run(cfg, records, wall);
}

int cmd_simulate_matrix(const ConfigSource& src) {
  return run_spectra_command(src, [](const RunConfig& cfg,
                                     const RealVector& lam0) {
    const Matrix m0 = lam0.cast<Complex>().asDiagonal();
    const ProjectedMatrixModel model(cfg.sim.beta, cfg.sim.delta_gap);
    return run_ensemble(model, cfg.sim, ProjectedMatrixModel::make_state(m0),
                        cfg.n_traj, cfg.workers);
  });
}

int cmd_simulate_eigen(const ConfigSource& src) {
  return run_spectra_command(
      src, [](const RunConfig& cfg, const RealVector& lam0) {
        const DysonEigenModel model(cfg.sim.beta, cfg.sim.delta_gap);
        return run_ensemble(model, cfg.sim, lam0, cfg.n_traj, cfg.workers);
      });
}

int cmd_flow_mcf(const ConfigSource& src) {
  KeyValueConfig kv = src.load();
  // The flow is deterministic; beta and n_traj are fixed.
  kv.set("beta", "inf");
  if (!kv.has("n_traj")) kv.set("n_traj", "1");
  const RunConfig cfg = parse_run_config(kv);
  const RealVector lam0 = initial_spectrum_from(kv, cfg.sim.n);
  prepare_output_dir(cfg);

  const auto t0 = std::chrono::steady_clock::now();
  const auto rec = integrate(CoulombOdeModel(cfg.sim.delta_gap), cfg.sim, lam0);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  // Spectrum, the mean-curvature velocity -H/2, and the discrepancy between
  // the Coulomb drift and that velocity (zero up to roundoff).
  const fs::path csv = cfg.output_dir / "flow.csv";
  std::ofstream out(csv);
  if (!out) throw IoError("cannot write file: " + csv.string());
  out << "t";
  for (int j = 1; j <= cfg.sim.n; ++j) out << ",lambda_" << j;
  for (int j = 1; j <= cfg.sim.n; ++j) out << ",mcf_velocity_" << j;
  out << ",drift_discrepancy\n";
  for (std::size_t i = 0; i < rec.times.size(); ++i) {
    const RealVector& lam = rec.records[i];
    const RealVector v = -0.5 * mean_curvature(lam);
    out << format_g17(rec.times[i]);
    for (int j = 0; j < cfg.sim.n; ++j) out << "," << format_g17(lam[j]);
    for (int j = 0; j < cfg.sim.n; ++j) out << "," << format_g17(v[j]);
    out << "," << format_g17(mcf_velocity_check(lam)) << "\n";
  }
  if (!out) throw IoError("write failed: " + csv.string());
  return finish_run(cfg, {rec}, wall);
}

int cmd_sphere(const ConfigSource& src) {
  const KeyValueConfig kv = src.load();
  const RunConfig cfg = parse_run_config(kv);
  const int q = cfg.sim.n;  // ambient dimension
  if (q < 2) {
    throw ConfigError("sphere: n (ambient dimension) must be >= 2; the "
                      "0-sphere has no tangent directions");
  }
  const double r0 = kv.get_real_or("r0", 1.0);
  if (!(r0 > 0.0)) throw ConfigError("config key 'r0': must be positive");
  prepare_output_dir(cfg);

  Eigen::VectorXd z0 = Eigen::VectorXd::Zero(q);
  z0[0] = r0;

  const auto t0 = std::chrono::steady_clock::now();
  const auto ito = run_ensemble(SphereModel(SphereScheme::ito_projection),
                                cfg.sim, z0, cfg.n_traj, cfg.workers);
  const auto strat = run_ensemble(SphereModel(SphereScheme::stratonovich),
                                  cfg.sim, z0, cfg.n_traj, cfg.workers);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  for (const auto& rec : ito) {
    write_record_csv(cfg.output_dir / indexed_name("radius_ito",
                                                   rec.traj_index),
                     rec, "radius");
  }
  for (const auto& rec : strat) {
    write_record_csv(cfg.output_dir / indexed_name("radius_stratonovich",
                                                   rec.traj_index),
                     rec, "radius");
  }
  std::vector<TrajectoryRecord> all = ito;
  all.insert(all.end(), strat.begin(), strat.end());
  return finish_run(cfg, all, wall,
                    {{"schemes", "ito_projection,stratonovich"},
                     {"r0", format_g17(r0)}});
}

// --- validation suites ---

RealVector random_spaced_spectrum(int n, NoiseStream& st) {
  RealVector lam(n);
  double x = -1.0 + st.uniform();
  for (int j = 0; j < n; ++j) {
    lam[j] = x;
    x += 0.2 + st.uniform();
  }
  return lam;
}

std::vector<ValidationCheck> suite_mcf(std::uint64_t seed) {
  std::vector<ValidationCheck> checks;
  NoiseStream st(seed);

  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(st.next_u64() % 7);
    worst = std::max(worst, mcf_velocity_check(random_spaced_spectrum(n, st)));
  }
  checks.push_back({"coulomb_drift_equals_minus_half_H", worst, 1e-12,
                    worst <= 1e-12});

  // n = 2 gap law: d(gap)/dt = 4 / gap, so gap(t) = sqrt(1 + 4 t).
  SimConfig cfg;
  cfg.n = 2;
  cfg.beta = std::numeric_limits<double>::infinity();
  cfg.t_end = 1.0;
  cfg.dt = 1e-5;
  cfg.record_every = cfg.steps();
  RealVector lam0(2);
  lam0 << 0.0, 1.0;
  const auto rec = integrate(CoulombOdeModel(cfg.delta_gap), cfg, lam0);
  const double gap = rec.records.back()[1] - rec.records.back()[0];
  const double ref = std::sqrt(1.0 + 4.0 * cfg.t_end);
  const double rel = std::abs(gap - ref) / ref;
  checks.push_back({"two_particle_gap_sqrt_1_plus_4t", rel, 1e-3, rel <= 1e-3});

  double trace_drift = 0.0;
  for (const auto& row : rec.records) {
    trace_drift = std::max(trace_drift, std::abs(row.sum() - lam0.sum()));
  }
  checks.push_back({"trace_conserved", trace_drift, 1e-10,
                    trace_drift <= 1e-10});
  return checks;
}

std::vector<ValidationCheck> suite_theorem1_beta2(std::uint64_t seed) {
  // At beta = 2 the matrix process started from M0 is M0 plus a Hermitian
  // Brownian motion, so the terminal spectrum must match eigh(M0 + GUE(t)).
  std::vector<ValidationCheck> checks;
  const int n = 4;
  const int n_traj = 1500;

  SimConfig cfg;
  cfg.n = n;
  cfg.beta = 2.0;
  cfg.t_end = 0.5;
  cfg.dt = 1e-3;
  cfg.seed = seed;
  cfg.record_every = cfg.steps();
  const RealVector lam0 = default_initial_spectrum(n);
  const Matrix m0 = lam0.cast<Complex>().asDiagonal();

  const ProjectedMatrixModel model(cfg.beta, cfg.delta_gap);
  const auto records = run_ensemble(
      model, cfg, ProjectedMatrixModel::make_state(m0), n_traj, 1);

  std::vector<std::vector<double>> sim(n), ref(n);
  NoiseStream st(seed + 1);
  for (const auto& rec : records) {
    if (!rec.valid || rec.stop_reason != StopReason::none) continue;
    const RealVector& lam = rec.records.back();
    const RealVector r = eigh(m0 + sample_gue(n, cfg.t_end, st)).lambda;
    for (int j = 0; j < n; ++j) {
      sim[j].push_back(lam[j]);
      ref[j].push_back(r[j]);
    }
  }
  const double alpha = 0.01 / n;
  for (int j = 0; j < n; ++j) {
    const auto ks = ks_two_sample(sim[j], ref[j]);
    checks.push_back({"ks_marginal_lambda_" + std::to_string(j + 1),
                      ks.p_value, alpha, ks.p_value >= alpha});
  }
  return checks;
}

std::vector<ValidationCheck> suite_sphere(std::uint64_t seed) {
  std::vector<ValidationCheck> checks;
  const int q = 3;
  const double r0 = 1.0;

  SimConfig cfg;
  cfg.n = q;
  cfg.t_end = 0.5;
  cfg.dt = 1e-4;
  cfg.seed = seed;
  cfg.record_every = cfg.steps();
  Eigen::VectorXd z0 = Eigen::VectorXd::Zero(q);
  z0[0] = r0;

  const auto ito = run_ensemble(SphereModel(SphereScheme::ito_projection),
                                cfg, z0, 500, 1);
  std::vector<double> radii;
  for (const auto& rec : ito) radii.push_back(rec.records.back()[0]);
  const double ref = std::sqrt(r0 * r0 + (q - 1) * cfg.t_end);
  const double err = std::abs(sample_mean(radii) - ref);
  checks.push_back({"ito_radius_sqrt_law", err, 5e-2, err <= 5e-2});

  const auto strat = run_ensemble(SphereModel(SphereScheme::stratonovich),
                                  cfg, z0, 100, 1);
  double worst = 0.0;
  for (const auto& rec : strat) {
    worst = std::max(worst, std::abs(rec.records.back()[0] - r0));
  }
  checks.push_back({"stratonovich_radius_conserved", worst, 1e-2,
                    worst <= 1e-2});
  return checks;
}

std::vector<ValidationCheck> suite_trace_law(std::uint64_t seed) {
  // Tr M_t - Tr M_0 is a centered Gaussian with variance (2 / beta) n t;
  // at beta = infinity the trace is constant pathwise.
  std::vector<ValidationCheck> checks;
  const int n = 4;
  const int n_traj = 3000;

  for (double beta : {2.0}) {
    SimConfig cfg;
    cfg.n = n;
    cfg.beta = beta;
    cfg.t_end = 0.5;
    cfg.dt = 2.5e-3;
    cfg.seed = seed;
    cfg.record_every = cfg.steps();
    const RealVector lam0 = default_initial_spectrum(n);
    const Matrix m0 = lam0.cast<Complex>().asDiagonal();
    const ProjectedMatrixModel model(beta, cfg.delta_gap);
    const auto records = run_ensemble(
        model, cfg, ProjectedMatrixModel::make_state(m0), n_traj, 1);
    std::vector<double> deltas;
    for (const auto& rec : records) {
      if (!rec.valid || rec.stop_reason != StopReason::none) continue;
      deltas.push_back(rec.records.back().sum() - lam0.sum());
    }
    const double expected = (2.0 / beta) * n * cfg.t_end;
    const double rel = std::abs(sample_variance(deltas) - expected) / expected;
    checks.push_back({"trace_variance_beta_2", rel, 0.1, rel <= 0.1});
  }

  SimConfig cfg;
  cfg.n = n;
  cfg.beta = std::numeric_limits<double>::infinity();
  cfg.t_end = 0.2;
  cfg.dt = 1e-3;
  cfg.seed = seed;
  const RealVector lam0 = default_initial_spectrum(n);
  const Matrix m0 = lam0.cast<Complex>().asDiagonal();
  const ProjectedMatrixModel model(cfg.beta, cfg.delta_gap);
  const auto rec =
      integrate(model, cfg, ProjectedMatrixModel::make_state(m0));
  double worst = 0.0;
  for (const auto& row : rec.records) {
    worst = std::max(worst, std::abs(row.sum() - lam0.sum()));
  }
  checks.push_back({"trace_pathwise_beta_inf", worst, 1e-9, worst <= 1e-9});
  return checks;
}

int cmd_validate(const std::string& suite, const std::string& report_path,
                 std::uint64_t seed) {
  std::vector<ValidationCheck> checks;
  if (suite == "mcf") {
    checks = suite_mcf(seed);
  } else if (suite == "theorem1-beta2") {
    checks = suite_theorem1_beta2(seed);
  } else if (suite == "sphere") {
    checks = suite_sphere(seed);
  } else if (suite == "trace-law") {
    checks = suite_trace_law(seed);
  } else {
    std::cerr << "unknown validation suite: " << suite
              << " (known: mcf, theorem1-beta2, sphere, trace-law)\n";
    return kExitConfig;
  }
  write_validation_report(report_path, suite, checks);
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.check
              << " value=" << format_g17(c.value)
              << " threshold=" << format_g17(c.threshold) << "\n";
    all = all && c.pass;
  }
  return all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyson Brownian motion via projected matrix diffusion"};
  app.require_subcommand(1);

  ConfigSource matrix_src, eigen_src, mcf_src, sphere_src;
  auto* sim_matrix = app.add_subcommand(
      "simulate-matrix", "projected Hermitian-matrix Brownian motion");
  matrix_src.attach(sim_matrix, kRunKeys);

  auto* sim_eigen = app.add_subcommand(
      "simulate-eigen", "direct eigenvalue SDE (independent oracle)");
  eigen_src.attach(sim_eigen, kRunKeys);

  auto* flow = app.add_subcommand(
      "flow-mcf", "deterministic Coulomb flow with mean-curvature columns");
  mcf_src.attach(flow, kRunKeys);

  auto* sphere = app.add_subcommand(
      "sphere", "projection scheme on the sphere (n = ambient dimension)");
  sphere_src.attach(sphere, kRunKeys);
  sphere->add_option_function<std::string>(
      "--r0", [&](const std::string& v) { sphere_src.overrides["r0"] = v; },
      "initial radius (default 1)");

  auto* validate = app.add_subcommand("validate", "run a validation suite");
  std::string suite;
  std::string report_path = "report.json";
  std::uint64_t val_seed = 0;
  validate->add_option("suite", suite, "mcf | theorem1-beta2 | sphere | trace-law")
      ->required();
  validate->add_option("-o,--output", report_path, "report file");
  validate->add_option("--seed", val_seed, "suite RNG seed");

  try {
    app.parse(argc, argv);
    if (sim_matrix->parsed()) return cmd_simulate_matrix(matrix_src);
    if (sim_eigen->parsed()) return cmd_simulate_eigen(eigen_src);
    if (flow->parsed()) return cmd_flow_mcf(mcf_src);
    if (sphere->parsed()) return cmd_sphere(sphere_src);
    if (validate->parsed()) return cmd_validate(suite, report_path, val_seed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
