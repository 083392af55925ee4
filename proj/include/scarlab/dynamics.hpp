#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "scarlab/spectral.hpp"

namespace scarlab::dynamics {

enum class StateKind { W, GHZ, Neel, custom };

const char* state_name(StateKind kind);

/// |W> = one flipped spin symmetrized over sites, |GHZ> = (|up..up> +
/// |down..down>)/sqrt(2), |Neel> alternates starting spin-up at site 0
/// (needs even N).
Eigen::VectorXcd make_state(StateKind kind, int sites);

/// Product state from a bitstring; leftmost character is site 0, '1' = up.
Eigen::VectorXcd make_state_bits(const std::string& bits, int sites);

/// Normalized copy of an arbitrary amplitude vector.
Eigen::VectorXcd make_state_amplitudes(const Eigen::VectorXcd& amplitudes);

struct FidelitySeries {
  std::vector<double> times;
  std::vector<double> values;
};

/// Return fidelity F(t) = |<psi0| e^{-iHt} |psi0>|^2 evaluated spectrally:
/// the overlaps c_k = <phi_k|psi0> are computed once, then
/// F(t) = |sum_k |c_k|^2 e^{-i E_k t}|^2 exactly (no time stepping).
FidelitySeries fidelity_series(const spectral::Spectrum& spec,
                               const Eigen::VectorXcd& psi0,
                               std::vector<double> times);

struct RevivalMetrics {
  double min_fidelity = 0.0;
  std::vector<std::pair<double, double>> revival_peaks;  // interior maxima
  std::optional<double> decay_time;  // first t with F < threshold
};

RevivalMetrics revival_metrics(const FidelitySeries& series, double threshold = 0.1);

std::vector<double> uniform_times(double tmax = 100.0, int points = 2000);

}  // namespace scarlab::dynamics
