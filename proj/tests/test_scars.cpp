#include <cmath>

#include "doctest.h"
#include "scarlab/cluster.hpp"
#include "scarlab/errors.hpp"
#include "scarlab/scars.hpp"
#include "scarlab/spectral.hpp"
#include "scarlab/spin_ops.hpp"

using namespace scarlab;
using scars::AblationMode;
using spectral::Spectrum;

namespace {

cluster::CouplingGraph chain(int n) {
  return cluster::build_cluster({cluster::Kind::chain, n, cluster::Boundary::periodic});
}

}  // namespace

TEST_SUITE("scars") {

TEST_CASE("unperturbed profile hits one exactly on the ladder") {
  const int n = 4;
  const double h = 0.5;
  const auto graph = chain(n);
  const Spectrum spec = spectral::diagonalize_sectors(spin::build_h0(graph, h));
  const auto ft = spectral::first_tower(graph, h);
  const std::vector<double> ladder(ft.energies.data(), ft.energies.data() + ft.energies.size());

  const double window = 0.1;  // below h/2, so windows never span two rungs
  const auto grid = scars::default_energy_grid(spec, ladder, window);
  const auto profile = scars::scar_fidelity(spec, ft.states, grid, window);

  for (std::size_t g = 0; g < profile.energy_grid.size(); ++g) {
    CHECK(profile.f_values[g] >= 0.0);
    CHECK(profile.f_values[g] <= 1.0 + 1e-9);
  }
  for (double rung : ladder) {
    bool found = false;
    for (std::size_t g = 0; g < profile.energy_grid.size(); ++g)
      if (profile.energy_grid[g] == rung) {
        CHECK(profile.f_values[g] == doctest::Approx(1.0).epsilon(1e-10));
        found = true;
      }
    CHECK(found);
  }

  // midway between rungs nothing overlaps the tower
  const auto mid = scars::scar_fidelity(spec, ft.states, {0.25}, window);
  CHECK(mid.f_values[0] <= 1e-12);

  // exactly N+1 peaks, each within the window of a rung
  const auto peaks = scars::extract_peaks(profile, 0.1);
  REQUIRE(peaks.size() == std::size_t(n + 1));
  for (std::size_t p = 0; p < peaks.size(); ++p) {
    CHECK(peaks[p].second == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(peaks[p].first - ladder[p]) <= window);
  }
}

TEST_CASE("profile with the window covering the whole range recovers 2l+1") {
  const int n = 6;
  const auto graph = chain(n);
  const auto real = spin::sample_fields(n, 0.15, 0.0, 0.5, 21);
  auto ham = spin::build_h0(graph, 0.5);
  ham.mat += spin::build_hran(real).mat;
  const Spectrum spec = spectral::diagonalize(ham);
  const auto ft = spectral::first_tower(graph, 0.5);

  const double span = spec.energies[spec.energies.size() - 1] - spec.energies[0];
  const double mid = 0.5 * (spec.energies[0] + spec.energies[spec.energies.size() - 1]);
  const auto wide = scars::scar_fidelity(spec, ft.states, {mid}, 2.0 * span + 1.0);
  CHECK(wide.f_values[0] == doctest::Approx(n + 1).epsilon(1e-9));
}

TEST_CASE("windows on a uniform grid with step equal to the window partition the overlap") {
  const int n = 6;
  const auto graph = chain(n);
  const auto real = spin::sample_fields(n, 0.15, 0.1, 0.5, 22);
  auto ham = spin::build_h0(graph, 0.5);
  ham.mat += spin::build_hran(real).mat;
  const Spectrum spec = spectral::diagonalize(ham);
  const auto ft = spectral::first_tower(graph, 0.5);

  const double window = scars::default_window(spec);
  std::vector<double> grid;
  for (double e = spec.energies[0]; e <= spec.energies[spec.energies.size() - 1] + 0.5 * window;
       e += window)
    grid.push_back(e);
  const auto profile = scars::scar_fidelity(spec, ft.states, grid, window);
  double total = 0.0;
  for (double f : profile.f_values) total += f;
  CHECK(total == doctest::Approx(n + 1).epsilon(1e-9));  // f-sum: each state counted once
}

TEST_CASE("peak extraction edge cases") {
  scars::ScarProfile zero;
  zero.energy_grid = {0, 1, 2, 3};
  zero.f_values = {0, 0, 0, 0};
  zero.window = 0.1;
  CHECK(scars::extract_peaks(zero, 0.1).empty());
  scars::ScarProfile empty;
  CHECK_THROWS_AS(scars::extract_peaks(empty, 0.1), ConfigError);

  const Spectrum spec = spectral::diagonalize_sectors(spin::build_h0(chain(4), 0.5));
  const auto ft = spectral::first_tower(chain(4), 0.5);
  CHECK_THROWS_AS(scars::scar_fidelity(spec, ft.states, {}, 0.1), ConfigError);
  CHECK_THROWS_AS(scars::scar_fidelity(spec, ft.states, {0.0}, 0.0), ConfigError);
}

TEST_CASE("tower-basis matrix and ablation masks") {
  const int n = 6;
  const double h = 0.5;
  const auto graph = chain(n);
  Spectrum h0_spec = spectral::diagonalize_sectors(spin::build_h0(graph, h));
  const auto s2 = spin::total_spin_ops(n).s2;
  const auto table = spectral::label_towers(h0_spec, s2, h);
  const auto real = spin::sample_fields(n, 0.15, 0.1, h, 23);  // complex case
  const auto h_ran = spin::build_hran(real);

  const Eigen::MatrixXcd pert = scars::tower_perturbation(h0_spec, h_ran);

  SUBCASE("perturbation only couples adjacent m") {
    std::vector<int> m2(table.rows.size());
    for (const auto& row : table.rows) m2[row.state] = int(std::lround(2 * row.m));
    for (Eigen::Index j = 0; j < pert.cols(); ++j)
      for (Eigen::Index i = 0; i < pert.rows(); ++i)
        if (std::abs(m2[i] - m2[j]) != 2) CHECK(std::abs(pert(i, j)) < 1e-10);
  }

  const Eigen::MatrixXcd none = scars::apply_ablation(pert, h0_spec, table, AblationMode::none);
  const Eigen::MatrixXcd full = scars::apply_ablation(pert, h0_spec, table, AblationMode::full);
  const Eigen::MatrixXcd intra =
      scars::apply_ablation(pert, h0_spec, table, AblationMode::intra_l_only);
  const Eigen::MatrixXcd inter =
      scars::apply_ablation(pert, h0_spec, table, AblationMode::inter_l_only);

  SUBCASE("mode none reproduces the H0 energies on the diagonal") {
    Eigen::MatrixXcd diag = h0_spec.energies.cast<std::complex<double>>().asDiagonal();
    CHECK((none - diag).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("mode full is unitarily equivalent to the perturbed Hamiltonian") {
    auto ham = spin::build_h0(graph, h);
    ham.mat += h_ran.mat;
    const Eigen::VectorXd direct = spectral::eigenvalues(ham);
    const Eigen::VectorXd via_basis = spectral::eigenvalues(full);
    CHECK((direct - via_basis).cwiseAbs().maxCoeff() <= 1e-9);
  }

  SUBCASE("masks partition the full matrix entrywise") {
    const Eigen::MatrixXcd sum = none + (intra - none) + (inter - none);
    CHECK((full - sum).cwiseAbs().maxCoeff() == 0.0);
    // intra and inter keep disjoint off-diagonal entries
    for (Eigen::Index j = 0; j < full.cols(); ++j)
      for (Eigen::Index i = 0; i < full.rows(); ++i)
        if (i != j && intra(i, j) != 0.0) CHECK(inter(i, j) == 0.0);
  }

  SUBCASE("results are Hermitian") {
    for (const auto* m : {&none, &full, &intra, &inter})
      CHECK((*m - m->adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("tower_basis_matrix composes the two steps") {
    const Eigen::MatrixXcd direct =
        scars::tower_basis_matrix(h0_spec, table, h_ran, AblationMode::intra_l_only);
    CHECK((direct - intra).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("dimension mismatches are rejected") {
    const auto small = spin::build_hran(spin::sample_fields(4, 0.1, 0.0, h, 1));
    CHECK_THROWS_AS(scars::tower_perturbation(h0_spec, small), ConfigError);
  }
}

}  // TEST_SUITE
