#include "scarlab/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "scarlab/csv.hpp"
#include "scarlab/lapack.hpp"
#include "scarlab/spectral.hpp"
#include "scarlab/version.hpp"

namespace scarlab::harness {

namespace fs = std::filesystem;
using levelstats::LevelSet;
using levelstats::Scope;
using levelstats::SpacingHistogram;
using spectral::Spectrum;
using spin::FieldRealization;
using spin::OperatorMatrix;

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::levels: return "levels";
    case Experiment::rstat: return "rstat";
    case Experiment::pofs: return "pofs";
    case Experiment::rsweep_h: return "rsweep_h";
    case Experiment::rgrid_xy: return "rgrid_xy";
    case Experiment::scar: return "scar";
    case Experiment::ablate: return "ablate";
    case Experiment::dynamics: return "dynamics";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (realizations < 1) throw ConfigError("config: realizations must be >= 1");
  if (!finite(h) || !finite(x) || !finite(y)) throw ConfigError("config: non-finite parameter");
  if (x < 0 || y < 0) throw ConfigError("config: half-widths must be nonnegative");
  if (bins < 1 || !finite(s_max) || s_max <= 0) throw ConfigError("config: bad histogram bins");
  if (poly_degree < 1) throw ConfigError("config: polynomial degree must be >= 1");
  if (!finite(hmin) || !finite(hmax) || hpoints < 1) throw ConfigError("config: bad h sweep");
  if (!finite(xymax) || xymax < 0 || gridpoints < 1) throw ConfigError("config: bad xy grid");
  if (!finite(delta) || delta < 0) throw ConfigError("config: delta must be nonnegative");
  if (!finite(tmax) || tmax <= 0 || tpoints < 2) throw ConfigError("config: bad time grid");
  if (degeneracy_cut < 0) throw ConfigError("config: degeneracy cut must be nonnegative");
  if (scope == Scope::m_sector && (x != 0.0 || y != 0.0))
    throw ConfigError("config: m-sector scope needs x = y = 0 (m is not conserved otherwise)");
  for (dynamics::StateKind s : states)
    if (s == dynamics::StateKind::custom && custom_bits.empty())
      throw ConfigError("config: custom state needs a bitstring");
}

namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

nlohmann::json config_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["experiment"] = experiment_name(c.experiment);
  j["cluster"] = c.cluster;
  j["h"] = c.h;
  j["x"] = c.x;
  j["y"] = c.y;
  j["seed"] = c.seed;
  j["realizations"] = c.realizations;
  j["scope"] = c.scope == Scope::whole_spectrum ? "whole" : "sector";
  j["normalize"] = c.normalize == levelstats::NormalizeMode::mean_spacing
                       ? "mean"
                       : "poly:" + std::to_string(c.poly_degree);
  j["bins"] = c.bins;
  j["s_max"] = c.s_max;
  j["degeneracy_cut"] = c.degeneracy_cut;
  j["hmin"] = c.hmin;
  j["hmax"] = c.hmax;
  j["hpoints"] = c.hpoints;
  j["xymax"] = c.xymax;
  j["gridpoints"] = c.gridpoints;
  j["delta"] = c.delta;
  j["min_peak_height"] = c.min_peak_height;
  j["mode"] = c.mode ? scars::mode_name(*c.mode) : "all";
  std::vector<std::string> state_names;
  for (dynamics::StateKind s : c.states) state_names.emplace_back(dynamics::state_name(s));
  j["states"] = state_names;
  if (!c.custom_bits.empty()) j["custom_bits"] = c.custom_bits;
  j["tmax"] = c.tmax;
  j["tpoints"] = c.tpoints;
  j["out_dir"] = c.out_dir;
  if (!c.vectors_out.empty()) j["vectors_out"] = c.vectors_out;
  return j;
}

/// OpenMP loop over realizations; exceptions are captured and rethrown
/// after the loop.
template <typename Fn>
void parallel_for_count(int count, Fn&& fn) {
  std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      fn(k);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

struct Context {
  const ExperimentConfig& cfg;
  cluster::CouplingGraph graph;
  fs::path dir;
  std::vector<std::string> outputs;

  FieldRealization fields(int k) const {
    return spin::sample_fields(graph.sites, cfg.x, cfg.y, cfg.h, cfg.seed + std::uint64_t(k));
  }
  OperatorMatrix hamiltonian(const FieldRealization& real) const {
    OperatorMatrix h = spin::build_h0(graph, cfg.h);
    h.mat += spin::build_hran(real).mat;
    return h;
  }
  std::string file(const std::string& name) {
    outputs.push_back(name);
    return (dir / name).string();
  }
};

Eigen::VectorXd whole_levels(const Context& ctx, int k) {
  return spectral::eigenvalues(ctx.hamiltonian(ctx.fields(k)));
}

/// Per-sector eigenvalues of H0 (x = y = 0 path); sector index -> levels.
std::vector<std::pair<double, Eigen::VectorXd>> sector_levels(const Context& ctx) {
  const OperatorMatrix h0 = spin::build_h0(ctx.graph, ctx.cfg.h);
  const auto sectors = spectral::sector_decompose(ctx.graph.sites);
  std::vector<Eigen::Index> local(h0.dim());
  std::vector<std::pair<double, Eigen::VectorXd>> out;
  for (const auto& idx : sectors) {
    const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
    if (m == 0) continue;
    for (Eigen::Index a = 0; a < m; ++a) local[idx[a]] = a;
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
      for (spin::SparseC::InnerIterator it(h0.mat, Eigen::Index(idx[a])); it; ++it)
        block(local[std::uint64_t(it.row())], a) = it.value().real();
    const double mag = spin::magnetization(idx[0], ctx.graph.sites);
    out.emplace_back(mag, lapack::eigvalsh(std::move(block)));
  }
  return out;
}

std::vector<double> spacings_for(const ExperimentConfig& cfg, const Eigen::VectorXd& levels,
                                 Scope scope, double m) {
  LevelSet set{levels, scope, m, ""};
  return levelstats::normalize_spacings(set, cfg.normalize, cfg.poly_degree);
}

void write_histogram_csv(Context& ctx, const std::string& name, const SpacingHistogram& histo) {
  csv::Writer out(ctx.file(name),
                  {"bin_left", "bin_right", "density", "reference_poisson", "reference_goe",
                   "reference_gue"});
  for (std::size_t b = 0; b + 1 < histo.bin_edges.size(); ++b) {
    const double mid = 0.5 * (histo.bin_edges[b] + histo.bin_edges[b + 1]);
    out.row({histo.bin_edges[b], histo.bin_edges[b + 1], histo.densities[b],
             levelstats::reference_pdf(levelstats::ReferenceKind::poisson, mid),
             levelstats::reference_pdf(levelstats::ReferenceKind::goe, mid),
             levelstats::reference_pdf(levelstats::ReferenceKind::gue, mid)});
  }
}

// ---------------------------------------------------------------- levels --

void run_levels(Context& ctx) {
  const ExperimentConfig& cfg = ctx.cfg;
  if (cfg.x == 0.0 && cfg.y == 0.0) {
    Spectrum spec = spectral::diagonalize_sectors(spin::build_h0(ctx.graph, cfg.h));
    const auto s2 = spin::total_spin_ops(ctx.graph.sites).s2;
    const spectral::TowerTable table = spectral::label_towers(spec, s2, cfg.h);
    spectral::write_labeled_csv(ctx.file("levels.csv"), table);
    if (!cfg.vectors_out.empty())
      spectral::write_vector_archive((ctx.dir / cfg.vectors_out).string(), spec.vectors);
    return;
  }
  std::vector<Eigen::VectorXd> all(cfg.realizations);
  parallel_for_count(cfg.realizations, [&](int k) { all[k] = whole_levels(ctx, k); });
  csv::Writer out(ctx.file("levels.csv"), {"realization", "index", "energy"});
  for (int k = 0; k < cfg.realizations; ++k)
    for (Eigen::Index i = 0; i < all[k].size(); ++i)
      out.row({std::int64_t(k), std::int64_t(i), all[k][i]});
  if (!cfg.vectors_out.empty()) {
    Spectrum spec = spectral::diagonalize(ctx.hamiltonian(ctx.fields(0)));
    spectral::write_vector_archive((ctx.dir / cfg.vectors_out).string(), spec.vectors);
  }
}

// ----------------------------------------------------------------- rstat --

void run_rstat(Context& ctx) {
  const ExperimentConfig& cfg = ctx.cfg;
  csv::Writer out(ctx.file("rstat.csv"),
                  {"realization", "scope", "mean_r", "dropped_degenerate"});
  if (cfg.scope == Scope::m_sector) {
    const auto sectors = sector_levels(ctx);  // deterministic at x = y = 0
    for (int k = 0; k < cfg.realizations; ++k)
      for (const auto& [m, levels] : sectors) {
        if (levels.size() < 3) continue;
        try {
          const auto stat = levelstats::gap_ratios(LevelSet{levels, Scope::m_sector, m, ""},
                                                   cfg.degeneracy_cut);
          out.row({std::int64_t(k), "m=" + csv::Writer::format(m), stat.mean_r,
                   stat.dropped_degenerate});
        } catch (const ConfigError&) {
          // fully degenerate sector: no retained spacing pairs, no row
        }
      }
    return;
  }
  std::vector<levelstats::GapRatioStat> stats(cfg.realizations);
  parallel_for_count(cfg.realizations, [&](int k) {
    stats[k] = levelstats::gap_ratios(
        LevelSet{whole_levels(ctx, k), Scope::whole_spectrum, 0, ""}, cfg.degeneracy_cut);
  });
  for (int k = 0; k < cfg.realizations; ++k)
    out.row({std::int64_t(k), "whole", stats[k].mean_r, stats[k].dropped_degenerate});
}

// ------------------------------------------------------------------ pofs --

void run_pofs(Context& ctx) {
  const ExperimentConfig& cfg = ctx.cfg;
  std::vector<SpacingHistogram> histos(cfg.realizations);
  if (cfg.scope == Scope::m_sector) {
    const auto sectors = sector_levels(ctx);
    std::vector<double> pooled;
    for (const auto& [m, levels] : sectors) {
      if (levels.size() < 3) continue;
      const auto s = spacings_for(cfg, levels, Scope::m_sector, m);
      pooled.insert(pooled.end(), s.begin(), s.end());
    }
    const SpacingHistogram histo = levelstats::spacing_histogram(pooled, cfg.bins, cfg.s_max);
    histos.assign(cfg.realizations, histo);
  } else {
    parallel_for_count(cfg.realizations, [&](int k) {
      const auto s = spacings_for(cfg, whole_levels(ctx, k), Scope::whole_spectrum, 0);
      histos[k] = levelstats::spacing_histogram(s, cfg.bins, cfg.s_max);
    });
  }
  write_histogram_csv(ctx, "pofs.csv", average_histograms(histos));
}

// -------------------------------------------------------------- rsweep_h --

void run_rsweep(Context& ctx) {
  const ExperimentConfig& cfg = ctx.cfg;
  std::vector<double> hs(cfg.hpoints);
  for (int i = 0; i < cfg.hpoints; ++i)
    hs[i] = cfg.hpoints == 1
                ? cfg.hmin
                : cfg.hmin + (cfg.hmax - cfg.hmin) * double(i) / double(cfg.hpoints - 1);
  std::vector<double> mean_r(cfg.hpoints, 0.0);
  const int jobs = cfg.hpoints * cfg.realizations;
  std::vector<double> per_job(jobs);
  parallel_for_count(jobs, [&](int j) {
    const int ih = j / cfg.realizations, k = j % cfg.realizations;
    const FieldRealization real =
        spin::sample_fields(ctx.graph.sites, cfg.x, cfg.y, hs[ih], cfg.seed + std::uint64_t(k));
    OperatorMatrix ham = spin::build_h0(ctx.graph, hs[ih]);
    ham.mat += spin::build_hran(real).mat;
    per_job[j] = levelstats::gap_ratios(
                     LevelSet{spectral::eigenvalues(ham), Scope::whole_spectrum, 0, ""},
                     cfg.degeneracy_cut)
                     .mean_r;
  });
  for (int i = 0; i < cfg.hpoints; ++i) {
    double sum = 0.0;
    for (int k = 0; k < cfg.realizations; ++k) sum += per_job[i * cfg.realizations + k];
    mean_r[i] = sum / cfg.realizations;
  }
  csv::Writer out(ctx.file("rsweep.csv"), {"h", "mean_r", "realizations"});
  for (int i = 0; i < cfg.hpoints; ++i)
    out.row({hs[i], mean_r[i], std::int64_t(cfg.realizations)});
}

// -------------------------------------------------------------- rgrid_xy --

void run_rgrid(Context& ctx) {
  const ExperimentConfig& cfg = ctx.cfg;
  const int g = cfg.gridpoints;
  auto coord = [&](int i) { return g == 1 ? 0.0 : cfg.xymax * double(i) / double(g - 1); };
  const int jobs = g * g * cfg.realizations;
  std::vector<double> per_job(jobs);
  parallel_for_count(jobs, [&](int j) {
    const int cell = j / cfg.realizations, k = j % cfg.realizations;
    const double x = coord(cell / g), y = coord(cell % g);
    // One seed per realization index: the same underlying uniforms rescaled
    // across the whole grid, so the map varies smoothly in (x, y).
    const FieldRealization real =
        spin::sample_fields(ctx.graph.sites, x, y, cfg.h, cfg.seed + std::uint64_t(k));
    OperatorMatrix ham = spin::build_h0(ctx.graph, cfg.h);
    ham.mat += spin::build_hran(real).mat;
    per_job[j] = levelstats::gap_ratios(
                     LevelSet{spectral::eigenvalues(ham), Scope::whole_spectrum, 0, ""},
                     cfg.degeneracy_cut)
                     .mean_r;
  });
  csv::Writer out(ctx.file("rgrid.csv"), {"x", "y", "mean_r"});
  for (int cell = 0; cell < g * g; ++cell) {
    double sum = 0.0;
    for (int k = 0; k < cfg.realizations; ++k) sum += per_job[cell * cfg.realizations + k];
    out.row({coord(cell / g), coord(cell % g), sum / cfg.realizations});
  }
}

// ------------------------------------------------------------------ scar --

void run_scar(Context& ctx) {
  const ExperimentConfig& cfg = ctx.cfg;
  const spectral::FirstTower tower = spectral::first_tower(ctx.graph, cfg.h);
  const std::vector<double> ladder(tower.energies.data(),
                                   tower.energies.data() + tower.energies.size());
  for (int k = 0; k < cfg.realizations; ++k) {
    const Spectrum spec = spectral::diagonalize(ctx.hamiltonian(ctx.fields(k)));
    const double window = cfg.delta > 0 ? cfg.delta : scars::default_window(spec);
    const auto grid = scars::default_energy_grid(spec, ladder, window);
    const scars::ScarProfile profile = scars::scar_fidelity(spec, tower.states, grid, window);
    const auto peaks = scars::extract_peaks(profile, cfg.min_peak_height);
    csv::Writer out(ctx.file(k == 0 ? "scar_f.csv" : "scar_f_" + std::to_string(k) + ".csv"),
                    {"E", "f", "is_peak", "nearest_ladder_E", "ladder_deviation"});
    std::size_t next_peak = 0;
    for (std::size_t i = 0; i < profile.energy_grid.size(); ++i) {
      const double e = profile.energy_grid[i];
      bool is_peak = false;
      if (next_peak < peaks.size() && peaks[next_peak].first == e) {
        is_peak = true;
        ++next_peak;
      }
      double nearest = ladder[0];
      for (double le : ladder)
        if (std::abs(le - e) < std::abs(nearest - e)) nearest = le;
      out.row({e, profile.f_values[i], std::int64_t(is_peak), nearest, e - nearest});
    }
  }
}

// ---------------------------------------------------------------- ablate --

void run_ablate(Context& ctx) {
  const ExperimentConfig& cfg = ctx.cfg;
  Spectrum h0_spec = spectral::diagonalize_sectors(spin::build_h0(ctx.graph, cfg.h));
  const auto s2 = spin::total_spin_ops(ctx.graph.sites).s2;
  const spectral::TowerTable table = spectral::label_towers(h0_spec, s2, cfg.h);
  std::vector<scars::AblationMode> modes;
  if (cfg.mode) modes = {*cfg.mode};
  else
    modes = {scars::AblationMode::none, scars::AblationMode::full,
             scars::AblationMode::intra_l_only, scars::AblationMode::inter_l_only};

  struct Row {
    double mean_r;
    std::vector<double> spacings;
  };
  std::vector<std::vector<Row>> results(cfg.realizations,
                                        std::vector<Row>(modes.size()));
  parallel_for_count(cfg.realizations, [&](int k) {
    const Eigen::MatrixXcd pert =
        scars::tower_perturbation(h0_spec, spin::build_hran(ctx.fields(k)));
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
      const Eigen::MatrixXcd m = scars::apply_ablation(pert, h0_spec, table, modes[mi]);
      const Eigen::VectorXd levels = spectral::eigenvalues(m);
      const LevelSet set{levels, Scope::whole_spectrum, 0, ""};
      results[k][mi].mean_r = levelstats::gap_ratios(set, cfg.degeneracy_cut).mean_r;
      results[k][mi].spacings = spacings_for(cfg, levels, Scope::whole_spectrum, 0);
    }
  });

  csv::Writer out(ctx.file("ablation.csv"), {"realization", "mode", "mean_r"});
  for (int k = 0; k < cfg.realizations; ++k)
    for (std::size_t mi = 0; mi < modes.size(); ++mi)
      out.row({std::int64_t(k), scars::mode_name(modes[mi]), results[k][mi].mean_r});

  for (std::size_t mi = 0; mi < modes.size(); ++mi) {
    std::vector<SpacingHistogram> histos(cfg.realizations);
    for (int k = 0; k < cfg.realizations; ++k)
      histos[k] = levelstats::spacing_histogram(results[k][mi].spacings, cfg.bins, cfg.s_max);
    write_histogram_csv(ctx, std::string("pofs_") + scars::mode_name(modes[mi]) + ".csv",
                        average_histograms(histos));
  }
}

// -------------------------------------------------------------- dynamics --

void write_plot_script(Context& ctx) {
  std::ofstream out(ctx.dir / "plot_fidelity.py");
  out << "#!/usr/bin/env python3\n"
         "# Plots fidelity.csv produced by the dynamics experiment.\n"
         "import csv, collections\n"
         "import matplotlib.pyplot as plt\n"
         "series = collections.defaultdict(lambda: ([], []))\n"
         "with open('fidelity.csv') as fh:\n"
         "    for row in csv.DictReader(fh):\n"
         "        key = f\"{row['state_kind']}:{row['realization']}\"\n"
         "        series[key][0].append(float(row['t']))\n"
         "        series[key][1].append(float(row['F']))\n"
         "for key, (ts, fs) in sorted(series.items()):\n"
         "    plt.plot(ts, fs, label=key)\n"
         "plt.xlabel('t')\n"
         "plt.ylabel('F(t)')\n"
         "plt.ylim(0, 1.05)\n"
         "plt.legend()\n"
         "plt.savefig('fidelity.png', dpi=150)\n";
  ctx.outputs.push_back("plot_fidelity.py");
}

void run_dynamics(Context& ctx) {
  const ExperimentConfig& cfg = ctx.cfg;
  csv::Writer out(ctx.file("fidelity.csv"), {"t", "F", "state_kind", "realization"});
  for (int k = 0; k < cfg.realizations; ++k) {
    const Spectrum spec = spectral::diagonalize(ctx.hamiltonian(ctx.fields(k)));
    for (dynamics::StateKind kind : cfg.states) {
      const Eigen::VectorXcd psi0 =
          kind == dynamics::StateKind::custom
              ? dynamics::make_state_bits(cfg.custom_bits, ctx.graph.sites)
              : dynamics::make_state(kind, ctx.graph.sites);
      const dynamics::FidelitySeries series =
          dynamics::fidelity_series(spec, psi0, dynamics::uniform_times(cfg.tmax, cfg.tpoints));
      for (std::size_t i = 0; i < series.times.size(); ++i)
        out.row({series.times[i], series.values[i], dynamics::state_name(kind),
                 std::int64_t(k)});
    }
  }
  write_plot_script(ctx);
}

}  // namespace

SpacingHistogram average_histograms(const std::vector<SpacingHistogram>& histos) {
  if (histos.empty()) throw ConfigError("average_histograms: empty list");
  SpacingHistogram avg = histos[0];
  for (std::size_t k = 1; k < histos.size(); ++k) {
    if (histos[k].bin_edges != avg.bin_edges)
      throw ConfigError("average_histograms: mismatched bins");
    for (std::size_t b = 0; b < avg.densities.size(); ++b)
      avg.densities[b] += histos[k].densities[b];
    avg.sample_count += histos[k].sample_count;
  }
  double integral = 0.0;
  for (std::size_t b = 0; b < avg.densities.size(); ++b)
    integral += avg.densities[b] * (avg.bin_edges[b + 1] - avg.bin_edges[b]);
  if (integral <= 0.0) throw ConfigError("average_histograms: zero mass");
  for (double& d : avg.densities) d /= integral;
  return avg;
}

std::string RunManifest::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["generator"] = generator;
  j["experiment"] = experiment;
  j["realization_seeds"] = realization_seeds;
  j["outputs"] = outputs;
  j["started_utc"] = started_utc;
  j["elapsed_seconds"] = elapsed_seconds;
  j["config"] = nlohmann::json::parse(config_json);
  return j.dump(2);
}

RunManifest run_experiment(const ExperimentConfig& config) {
  config.validate();
  lapack::set_blas_threads(1);  // realizations own the parallelism

  Context ctx{config, cluster::resolve_cluster(config.cluster), fs::path(config.out_dir), {}};
  std::error_code ec;
  fs::create_directories(ctx.dir, ec);
  if (ec || !fs::is_directory(ctx.dir))
    throw ConfigError("cannot create output directory '" + config.out_dir + "'");
  {
    std::ofstream probe(ctx.dir / ".write_probe");
    if (!probe) throw ConfigError("output directory '" + config.out_dir + "' is not writable");
  }
  fs::remove(ctx.dir / ".write_probe", ec);

  RunManifest manifest;
  manifest.version = kVersion;
  manifest.generator = spin::kGeneratorId;
  manifest.experiment = experiment_name(config.experiment);
  manifest.started_utc = utc_now();
  for (int k = 0; k < config.realizations; ++k)
    manifest.realization_seeds.push_back(config.seed + std::uint64_t(k));
  manifest.config_json = config_json(config).dump();

  const auto t0 = std::chrono::steady_clock::now();
  switch (config.experiment) {
    case Experiment::levels: run_levels(ctx); break;
    case Experiment::rstat: run_rstat(ctx); break;
    case Experiment::pofs: run_pofs(ctx); break;
    case Experiment::rsweep_h: run_rsweep(ctx); break;
    case Experiment::rgrid_xy: run_rgrid(ctx); break;
    case Experiment::scar: run_scar(ctx); break;
    case Experiment::ablate: run_ablate(ctx); break;
    case Experiment::dynamics: run_dynamics(ctx); break;
  }
  manifest.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  manifest.outputs = ctx.outputs;

  std::ofstream mf(ctx.dir / "manifest.json");
  if (!mf) throw ConfigError("cannot write manifest.json");
  mf << manifest.to_json() << "\n";
  manifest.outputs.push_back("manifest.json");
  return manifest;
}

}  // namespace scarlab::harness
