#include <omp.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "scarlab/errors.hpp"
#include "scarlab/harness.hpp"

using namespace scarlab;
using harness::Experiment;
using harness::ExperimentConfig;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

ExperimentConfig base_config(Experiment e, const std::string& dir) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  cfg.cluster = "chain:8:periodic";
  cfg.h = 0.5;
  cfg.x = 0.12;
  cfg.y = 0.0;
  cfg.seed = 5;
  cfg.realizations = 3;
  cfg.out_dir = dir;
  return cfg;
}

nlohmann::json manifest_without_clock(const fs::path& dir) {
  auto j = nlohmann::json::parse(slurp(dir / "manifest.json"));
  j.erase("started_utc");
  j.erase("elapsed_seconds");
  j["config"].erase("out_dir");
  return j;
}

int count_rows(const fs::path& csv) {
  std::ifstream in(csv);
  REQUIRE(in.good());
  int rows = -1;  // header
  for (std::string line; std::getline(in, line);) ++rows;
  return rows;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("rstat runs are byte-identical across repeats and thread counts") {
  const auto dir_a = fresh_dir("scarlab_h_a");
  const auto dir_b = fresh_dir("scarlab_h_b");
  const auto dir_c = fresh_dir("scarlab_h_c");

  auto cfg = base_config(Experiment::rstat, dir_a.string());
  harness::run_experiment(cfg);

  cfg.out_dir = dir_b.string();
  harness::run_experiment(cfg);

  const int old_threads = omp_get_max_threads();
  omp_set_num_threads(1);
  cfg.out_dir = dir_c.string();
  harness::run_experiment(cfg);
  omp_set_num_threads(old_threads);

  CHECK(slurp(dir_a / "rstat.csv") == slurp(dir_b / "rstat.csv"));
  CHECK(slurp(dir_a / "rstat.csv") == slurp(dir_c / "rstat.csv"));
  CHECK(manifest_without_clock(dir_a) == manifest_without_clock(dir_b));

  const auto manifest = nlohmann::json::parse(slurp(dir_a / "manifest.json"));
  CHECK(manifest["realization_seeds"] == nlohmann::json({5, 6, 7}));
  CHECK(manifest["generator"] == spin::kGeneratorId);
  CHECK(count_rows(dir_a / "rstat.csv") == 3);
}

TEST_CASE("sector-scope statistics need a conserved m") {
  auto cfg = base_config(Experiment::rstat, fresh_dir("scarlab_h_sector").string());
  cfg.scope = levelstats::Scope::m_sector;
  CHECK_THROWS_AS(harness::run_experiment(cfg), ConfigError);

  cfg.x = 0.0;
  cfg.realizations = 1;
  harness::run_experiment(cfg);
  // sectors with >= 3 levels and at least one non-degenerate spacing pair;
  // the one-magnon sectors (dim 8) are fully degenerate and drop out
  CHECK(count_rows(fs::path(cfg.out_dir) / "rstat.csv") == 5);
}

TEST_CASE("pofs emits an averaged density with reference columns") {
  auto cfg = base_config(Experiment::pofs, fresh_dir("scarlab_h_pofs").string());
  cfg.realizations = 2;
  harness::run_experiment(cfg);
  const fs::path csv = fs::path(cfg.out_dir) / "pofs.csv";
  CHECK(count_rows(csv) == cfg.bins);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "bin_left,bin_right,density,reference_poisson,reference_goe,reference_gue");
  double integral = 0.0;
  for (std::string line; std::getline(in, line);) {
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    REQUIRE(cells.size() == 6);
    integral += cells[2] * (cells[1] - cells[0]);
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("levels experiment labels unperturbed spectra") {
  auto cfg = base_config(Experiment::levels, fresh_dir("scarlab_h_lvl").string());
  cfg.x = 0.0;
  cfg.realizations = 1;
  cfg.vectors_out = "vectors.bin";
  harness::run_experiment(cfg);
  const fs::path dir(cfg.out_dir);
  std::ifstream in(dir / "levels.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,energy,m,l,n");
  CHECK(count_rows(dir / "levels.csv") == 256);
  CHECK(fs::file_size(dir / "vectors.bin") == 8 + 256 * 256 * 16);

  auto cfg2 = base_config(Experiment::levels, fresh_dir("scarlab_h_lvl2").string());
  cfg2.realizations = 2;
  harness::run_experiment(cfg2);
  std::ifstream in2(fs::path(cfg2.out_dir) / "levels.csv");
  std::getline(in2, header);
  CHECK(header == "realization,index,energy");
  CHECK(count_rows(fs::path(cfg2.out_dir) / "levels.csv") == 2 * 256);
}

TEST_CASE("sweeps produce one row per grid point") {
  auto cfg = base_config(Experiment::rsweep_h, fresh_dir("scarlab_h_sweep").string());
  cfg.realizations = 2;
  cfg.hmin = 0.0;
  cfg.hmax = 1.0;
  cfg.hpoints = 3;
  harness::run_experiment(cfg);
  CHECK(count_rows(fs::path(cfg.out_dir) / "rsweep.csv") == 3);

  auto grid = base_config(Experiment::rgrid_xy, fresh_dir("scarlab_h_grid").string());
  grid.realizations = 1;
  grid.gridpoints = 3;
  grid.xymax = 0.2;
  harness::run_experiment(grid);
  CHECK(count_rows(fs::path(grid.out_dir) / "rgrid.csv") == 9);
}

TEST_CASE("scar experiment writes the profile with peak markers") {
  auto cfg = base_config(Experiment::scar, fresh_dir("scarlab_h_scar").string());
  cfg.realizations = 1;
  harness::run_experiment(cfg);
  std::ifstream in(fs::path(cfg.out_dir) / "scar_f.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "E,f,is_peak,nearest_ladder_E,ladder_deviation");
  int peaks = 0, rows = 0;
  for (std::string line; std::getline(in, line);) {
    ++rows;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 5);
    if (cells[2] == "1") ++peaks;
  }
  CHECK(rows > 200);
  CHECK(peaks > 0);
}

TEST_CASE("ablation experiment covers all four modes by default") {
  auto cfg = base_config(Experiment::ablate, fresh_dir("scarlab_h_abl").string());
  cfg.realizations = 2;
  harness::run_experiment(cfg);
  const fs::path dir(cfg.out_dir);
  CHECK(count_rows(dir / "ablation.csv") == 2 * 4);
  for (const char* mode : {"none", "full", "intra", "inter"})
    CHECK(fs::exists(dir / (std::string("pofs_") + mode + ".csv")));

  auto single = base_config(Experiment::ablate, fresh_dir("scarlab_h_abl1").string());
  single.realizations = 1;
  single.mode = scars::AblationMode::inter_l_only;
  harness::run_experiment(single);
  CHECK(count_rows(fs::path(single.out_dir) / "ablation.csv") == 1);
}

TEST_CASE("dynamics experiment writes one row per time sample and state") {
  auto cfg = base_config(Experiment::dynamics, fresh_dir("scarlab_h_dyn").string());
  cfg.realizations = 1;
  cfg.tpoints = 64;
  cfg.tmax = 10.0;
  harness::run_experiment(cfg);
  const fs::path dir(cfg.out_dir);
  CHECK(count_rows(dir / "fidelity.csv") == 3 * 64);
  CHECK(fs::exists(dir / "plot_fidelity.py"));

  auto custom = base_config(Experiment::dynamics, fresh_dir("scarlab_h_dyn2").string());
  custom.realizations = 1;
  custom.tpoints = 16;
  custom.states = {dynamics::StateKind::custom};
  custom.custom_bits = "10100101";
  harness::run_experiment(custom);
  CHECK(count_rows(fs::path(custom.out_dir) / "fidelity.csv") == 16);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.realizations = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = ExperimentConfig{};
  cfg.x = -0.1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = ExperimentConfig{};
  cfg.states = {dynamics::StateKind::custom};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = ExperimentConfig{};
  cfg.tpoints = 1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  auto bad_dir = base_config(Experiment::rstat, "/proc/scarlab_nope");
  CHECK_THROWS_AS(harness::run_experiment(bad_dir), ConfigError);
}

TEST_CASE("histogram averaging") {
  levelstats::SpacingHistogram a;
  a.bin_edges = {0.0, 1.0, 2.0};
  a.densities = {1.0, 0.0};
  a.sample_count = 10;
  levelstats::SpacingHistogram b = a;
  b.densities = {0.0, 1.0};

  const auto same = harness::average_histograms({a, a});
  CHECK(same.densities == a.densities);
  const auto avg = harness::average_histograms({a, b});
  CHECK(avg.densities[0] == doctest::Approx(0.5));
  CHECK(avg.densities[1] == doctest::Approx(0.5));
  CHECK(avg.sample_count == 20);

  levelstats::SpacingHistogram mismatched = a;
  mismatched.bin_edges = {0.0, 0.5, 2.0};
  CHECK_THROWS_AS(harness::average_histograms({a, mismatched}), ConfigError);
  CHECK_THROWS_AS(harness::average_histograms({}), ConfigError);
}

}  // TEST_SUITE
