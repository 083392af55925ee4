#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scarlab/dynamics.hpp"
#include "scarlab/errors.hpp"
#include "scarlab/levelstats.hpp"
#include "scarlab/scars.hpp"

namespace scarlab::harness {

enum class Experiment { levels, rstat, pofs, rsweep_h, rgrid_xy, scar, ablate, dynamics };

const char* experiment_name(Experiment e);

struct ExperimentConfig {
  Experiment experiment = Experiment::levels;
  std::string cluster = "chain:12:periodic";
  double h = 0.5;
  double x = 0.0;
  double y = 0.0;
  std::uint64_t seed = 1;
  int realizations = 1;
  std::string out_dir = ".";

  // level statistics
  levelstats::Scope scope = levelstats::Scope::whole_spectrum;
  levelstats::NormalizeMode normalize = levelstats::NormalizeMode::mean_spacing;
  int poly_degree = 10;
  int bins = 40;
  double s_max = 4.0;
  double degeneracy_cut = 1e-10;

  // sweeps
  double hmin = 0.0;
  double hmax = 3.0;
  int hpoints = 13;
  double xymax = 0.3;
  int gridpoints = 13;

  // scars
  double delta = 0.0;  // 0 => (E_max - E_min)/200
  double min_peak_height = 0.1;
  std::optional<scars::AblationMode> mode;  // unset => all four modes

  // dynamics
  std::vector<dynamics::StateKind> states = {dynamics::StateKind::W,
                                             dynamics::StateKind::GHZ,
                                             dynamics::StateKind::Neel};
  std::string custom_bits;
  double tmax = 100.0;
  int tpoints = 2000;

  // eigenvector archive (levels experiment)
  std::string vectors_out;

  void validate() const;
};

struct RunManifest {
  std::string version;
  std::string generator;
  std::string experiment;
  std::vector<std::uint64_t> realization_seeds;
  std::vector<std::string> outputs;
  std::string started_utc;
  double elapsed_seconds = 0.0;
  std::string config_json;

  std::string to_json() const;
};

/// Runs the configured experiment over `realizations` seeded draws
/// (realization k uses seed + k), writes the CSV outputs plus
/// manifest.json into out_dir, and returns the manifest.
RunManifest run_experiment(const ExperimentConfig& config);

/// Bin-wise mean of histograms with identical edges, renormalized to unit
/// integral.
levelstats::SpacingHistogram average_histograms(
    const std::vector<levelstats::SpacingHistogram>& histos);

}  // namespace scarlab::harness
