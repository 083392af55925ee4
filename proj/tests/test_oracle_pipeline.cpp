// Cross-checks the whole pipeline on a 4-site chain against the
// straightforward dense implementation in oracle.cpp.

#include <algorithm>
#include <map>

#include "doctest.h"
#include "oracle.hpp"
#include "scarlab/cluster.hpp"
#include "scarlab/dynamics.hpp"
#include "scarlab/levelstats.hpp"
#include "scarlab/scars.hpp"
#include "scarlab/spectral.hpp"
#include "scarlab/spin_ops.hpp"

using namespace scarlab;
using spectral::Spectrum;

TEST_SUITE("oracle_pipeline") {

TEST_CASE("four-site chain against the brute-force implementation") {
  const int n = 4;
  const double h = 0.5;
  const auto graph = cluster::build_cluster({cluster::Kind::chain, n, cluster::Boundary::periodic});
  const auto real = spin::sample_fields(n, 0.15, 0.1, h, 97);

  SUBCASE("operator assembly matches the Kronecker build") {
    CHECK((spin::build_h0(graph, h).dense() - oracle::h0(graph, h)).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK((spin::build_hran(real).dense() - oracle::hran(real)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((spin::total_spin_ops(n).s2.dense() - oracle::total_s2(n)).cwiseAbs().maxCoeff() <
          1e-12);
  }

  SUBCASE("tower labels match") {
    Spectrum spec = spectral::diagonalize_sectors(spin::build_h0(graph, h));
    const auto table = spectral::label_towers(spec, spin::total_spin_ops(n).s2, h);
    auto expected = oracle::labeled_levels(graph, h);
    std::vector<oracle::LabeledLevel> got;
    for (const auto& row : table.rows) got.push_back({row.energy, row.l, row.m});
    // quantize the energy in the sort key so exact degeneracies order by
    // (l, m) on both sides
    auto key = [](const oracle::LabeledLevel& v) {
      return std::tuple(std::llround(v.energy * 1e9), v.l, v.m);
    };
    auto by_key = [&](const auto& a, const auto& b) { return key(a) < key(b); };
    std::sort(got.begin(), got.end(), by_key);
    std::sort(expected.begin(), expected.end(), by_key);
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(std::abs(got[k].energy - expected[k].energy) <= 1e-9);
      CHECK(got[k].l == expected[k].l);
      CHECK(got[k].m == expected[k].m);
    }
  }

  SUBCASE("gap ratios match on toy level sets") {
    const std::vector<std::vector<double>> toys = {
        {0, 1, 2, 3}, {0, 1, 3, 4}, {0.0, 0.3, 1.0, 1.1, 2.5, 2.6, 4.0}};
    for (const auto& toy : toys) {
      levelstats::LevelSet set;
      set.energies =
          Eigen::Map<const Eigen::VectorXd>(toy.data(), Eigen::Index(toy.size()));
      CHECK(std::abs(levelstats::gap_ratios(set).mean_r -
                     oracle::mean_gap_ratio(toy, 1e-10)) <= 1e-12);
    }
    // and on the perturbed four-site spectrum itself
    auto ham = spin::build_h0(graph, h);
    ham.mat += spin::build_hran(real).mat;
    const Eigen::VectorXd levels = spectral::eigenvalues(ham);
    levelstats::LevelSet set;
    set.energies = levels;
    CHECK(std::abs(levelstats::gap_ratios(set).mean_r -
                   oracle::mean_gap_ratio(
                       std::vector<double>(levels.data(), levels.data() + levels.size()),
                       1e-10)) <= 1e-12);
  }

  SUBCASE("unperturbed scar profile matches") {
    const Spectrum spec = spectral::diagonalize_sectors(spin::build_h0(graph, h));
    const auto ft = spectral::first_tower(graph, h);
    const std::vector<double> ladder(ft.energies.data(),
                                     ft.energies.data() + ft.energies.size());
    const double window = 0.1;
    const auto grid = scars::default_energy_grid(spec, ladder, window);
    const auto profile = scars::scar_fidelity(spec, ft.states, grid, window);

    oracle::Eigensystem eig = oracle::eigh(oracle::h0(graph, h));
    const auto expected = oracle::scar_profile(eig, ft.states, grid, window);
    REQUIRE(profile.f_values.size() == expected.size());
    for (std::size_t g = 0; g < expected.size(); ++g)
      CHECK(std::abs(profile.f_values[g] - expected[g]) <= 1e-9);
  }

  SUBCASE("fidelity curves match, perturbed and unperturbed") {
    std::vector<double> times;
    for (int i = 0; i <= 40; ++i) times.push_back(0.5 * i);

    auto ham = spin::build_h0(graph, h);
    ham.mat += spin::build_hran(real).mat;
    const Spectrum spec = spectral::diagonalize(ham);
    oracle::Eigensystem eig = oracle::eigh(oracle::h0(graph, h) + oracle::hran(real));
    const Spectrum h0_spec = spectral::diagonalize_sectors(spin::build_h0(graph, h));
    oracle::Eigensystem h0_eig = oracle::eigh(oracle::h0(graph, h));

    for (auto kind : {dynamics::StateKind::W, dynamics::StateKind::GHZ,
                      dynamics::StateKind::Neel}) {
      const auto psi0 = dynamics::make_state(kind, n);
      const auto series = dynamics::fidelity_series(spec, psi0, times);
      const auto expected = oracle::fidelity(eig, psi0, times);
      for (std::size_t i = 0; i < times.size(); ++i)
        CHECK(std::abs(series.values[i] - expected[i]) <= 1e-9);

      const auto series0 = dynamics::fidelity_series(h0_spec, psi0, times);
      const auto expected0 = oracle::fidelity(h0_eig, psi0, times);
      for (std::size_t i = 0; i < times.size(); ++i)
        CHECK(std::abs(series0.values[i] - expected0[i]) <= 1e-9);
    }
  }
}

}  // TEST_SUITE
