#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "scarlab/spectral.hpp"
#include "scarlab/spin_ops.hpp"

namespace scarlab::scars {

/// Windowed overlap profile f(E) of a perturbed spectrum against one
/// reference tower. f(E) sums |<phi(E')|psi(l,m)>|^2 over all perturbed
/// eigenstates with E' in [E - window/2, E + window/2) and all tower
/// members m.
struct ScarProfile {
  std::vector<double> energy_grid;
  std::vector<double> f_values;
  double window = 0.0;
};

/// Uniform grid with step `window` across the perturbed spectrum plus the
/// exact ladder energies, sorted and deduplicated.
std::vector<double> default_energy_grid(const spectral::Spectrum& perturbed,
                                        std::span<const double> ladder_energies,
                                        double window);

/// window <= 0 selects the default (E_max - E_min)/200.
double default_window(const spectral::Spectrum& perturbed);

ScarProfile scar_fidelity(const spectral::Spectrum& perturbed,
                          const Eigen::MatrixXcd& tower_states,
                          std::vector<double> energy_grid, double window);

/// Local maxima of the profile above min_height, sorted by energy.
std::vector<std::pair<double, double>> extract_peaks(const ScarProfile& profile,
                                                     double min_height = 0.1);

enum class AblationMode { none, full, intra_l_only, inter_l_only };

const char* mode_name(AblationMode mode);
AblationMode parse_mode(const std::string& name);

/// U^dag H_ran U: the perturbation rotated into the H0 eigenbasis.
Eigen::MatrixXcd tower_perturbation(const spectral::Spectrum& h0_spec,
                                    const spin::OperatorMatrix& h_ran);

/// diag(E) + masked perturbation; see tower_basis_matrix.
Eigen::MatrixXcd apply_ablation(const Eigen::MatrixXcd& perturbation,
                                const spectral::Spectrum& h0_spec,
                                const spectral::TowerTable& table, AblationMode mode);

/// Hamiltonian H0 + H_ran expressed in the tower-labeled eigenbasis of H0,
/// with off-diagonal entries kept or zeroed by mode: intra_l_only keeps
/// couplings between states of equal l, inter_l_only the complement, none
/// only the diagonal, full everything. The zeroing is symmetric, so the
/// result stays Hermitian.
Eigen::MatrixXcd tower_basis_matrix(const spectral::Spectrum& h0_spec,
                                    const spectral::TowerTable& table,
                                    const spin::OperatorMatrix& h_ran,
                                    AblationMode mode);

}  // namespace scarlab::scars
