#include "scarlab/scars.hpp"

#include <algorithm>
#include <cmath>

#include "scarlab/errors.hpp"
#include "scarlab/kernels.hpp"

namespace scarlab::scars {

double default_window(const spectral::Spectrum& perturbed) {
  const Eigen::Index n = perturbed.energies.size();
  return (perturbed.energies[n - 1] - perturbed.energies[0]) / 200.0;
}

std::vector<double> default_energy_grid(const spectral::Spectrum& perturbed,
                                        std::span<const double> ladder_energies,
                                        double window) {
  const Eigen::Index n = perturbed.energies.size();
  const double lo = perturbed.energies[0], hi = perturbed.energies[n - 1];
  std::vector<double> grid;
  for (double e = lo; e <= hi + 0.5 * window; e += window) grid.push_back(e);
  grid.insert(grid.end(), ladder_energies.begin(), ladder_energies.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             grid.end());
  return grid;
}

ScarProfile scar_fidelity(const spectral::Spectrum& perturbed,
                          const Eigen::MatrixXcd& tower_states,
                          std::vector<double> energy_grid, double window) {
  if (window <= 0.0) throw ConfigError("scar_fidelity: window must be positive");
  if (energy_grid.empty()) throw ConfigError("scar_fidelity: empty energy grid");
  if (!perturbed.has_vectors()) throw ConfigError("scar_fidelity: spectrum carries no vectors");
  if (perturbed.vectors.rows() != tower_states.rows())
    throw ConfigError("scar_fidelity: dimension mismatch");

  const Eigen::VectorXd weights = kernels::omp::overlap_weights(perturbed.vectors, tower_states);

  // prefix sums over the ascending spectrum make each window a difference
  const Eigen::Index n = weights.size();
  std::vector<double> prefix(n + 1, 0.0);
  for (Eigen::Index k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + weights[k];

  ScarProfile profile;
  profile.window = window;
  profile.energy_grid = std::move(energy_grid);
  profile.f_values.resize(profile.energy_grid.size());
  const double* e_begin = perturbed.energies.data();
  const double* e_end = e_begin + n;
  for (std::size_t g = 0; g < profile.energy_grid.size(); ++g) {
    // window closed on the left, open on the right
    const double lo = profile.energy_grid[g] - 0.5 * window;
    const double hi = profile.energy_grid[g] + 0.5 * window;
    const auto a = std::lower_bound(e_begin, e_end, lo) - e_begin;
    const auto b = std::lower_bound(e_begin, e_end, hi) - e_begin;
    profile.f_values[g] = prefix[b] - prefix[a];
  }
  return profile;
}

std::vector<std::pair<double, double>> extract_peaks(const ScarProfile& profile,
                                                     double min_height) {
  if (profile.energy_grid.empty()) throw ConfigError("extract_peaks: empty profile");
  // the grid spans exactly [E_min, E_max], so the top rung can sit on the
  // last grid point; boundary maxima count
  return kernels::local_maxima(profile.energy_grid, profile.f_values, min_height,
                               /*include_boundaries=*/true);
}

const char* mode_name(AblationMode mode) {
  switch (mode) {
    case AblationMode::none: return "none";
    case AblationMode::full: return "full";
    case AblationMode::intra_l_only: return "intra";
    case AblationMode::inter_l_only: return "inter";
  }
  return "?";
}

AblationMode parse_mode(const std::string& name) {
  if (name == "none") return AblationMode::none;
  if (name == "full") return AblationMode::full;
  if (name == "intra" || name == "intra_l_only") return AblationMode::intra_l_only;
  if (name == "inter" || name == "inter_l_only") return AblationMode::inter_l_only;
  throw ConfigError("unknown ablation mode '" + name + "'");
}

Eigen::MatrixXcd tower_perturbation(const spectral::Spectrum& h0_spec,
                                    const spin::OperatorMatrix& h_ran) {
  if (!h0_spec.has_vectors()) throw ConfigError("tower_perturbation: spectrum carries no vectors");
  if (h0_spec.vectors.rows() != h_ran.dim())
    throw ConfigError("tower_perturbation: dimension mismatch");
  const bool real = h_ran.is_real() && h0_spec.vectors.imag().cwiseAbs().maxCoeff() < 1e-14;
  if (real) {
    Eigen::SparseMatrix<double> s = h_ran.mat.real();
    return kernels::omp::congruence(Eigen::MatrixXd(h0_spec.vectors.real()), s)
        .cast<std::complex<double>>();
  }
  return kernels::omp::congruence(h0_spec.vectors, h_ran.mat);
}

Eigen::MatrixXcd apply_ablation(const Eigen::MatrixXcd& perturbation,
                                const spectral::Spectrum& h0_spec,
                                const spectral::TowerTable& table, AblationMode mode) {
  const Eigen::Index dim = perturbation.rows();
  if (table.rows.size() != std::size_t(dim) || h0_spec.energies.size() != dim)
    throw ConfigError("apply_ablation: dimension mismatch");

  std::vector<int> l2(dim);
  for (const spectral::TowerRow& r : table.rows)
    l2[r.state] = static_cast<int>(std::lround(2.0 * r.l));

  // M = diag(E) + masked U^dag H_ran U; H0 is exactly diagonal here.
  Eigen::MatrixXcd m = perturbation;
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i == j) continue;
      const bool same_l = l2[i] == l2[j];
      const bool keep = mode == AblationMode::full ||
                        (mode == AblationMode::intra_l_only && same_l) ||
                        (mode == AblationMode::inter_l_only && !same_l);
      if (!keep) m(i, j) = 0.0;
    }
  m.diagonal() += h0_spec.energies.cast<std::complex<double>>();

  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12)
    throw SolverError("apply_ablation: asymmetric zeroing (defect " + std::to_string(defect) +
                      ")");
  return m;
}

Eigen::MatrixXcd tower_basis_matrix(const spectral::Spectrum& h0_spec,
                                    const spectral::TowerTable& table,
                                    const spin::OperatorMatrix& h_ran, AblationMode mode) {
  return apply_ablation(tower_perturbation(h0_spec, h_ran), h0_spec, table, mode);
}

}  // namespace scarlab::scars
