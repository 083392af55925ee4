#include "scarlab/dynamics.hpp"

#include <cmath>

#include "scarlab/errors.hpp"
#include "scarlab/kernels.hpp"

namespace scarlab::dynamics {

const char* state_name(StateKind kind) {
  switch (kind) {
    case StateKind::W: return "W";
    case StateKind::GHZ: return "GHZ";
    case StateKind::Neel: return "Neel";
    case StateKind::custom: return "custom";
  }
  return "?";
}

Eigen::VectorXcd make_state(StateKind kind, int sites) {
  if (sites < 1 || sites > 24) throw ConfigError("make_state: site count out of range");
  const Eigen::Index dim = Eigen::Index(1) << sites;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  switch (kind) {
    case StateKind::W: {
      // one spin down against the polarized background, symmetrized
      const std::uint64_t all_up = (std::uint64_t(1) << sites) - 1;
      const double amp = 1.0 / std::sqrt(double(sites));
      for (int j = 0; j < sites; ++j) psi[Eigen::Index(all_up ^ (std::uint64_t(1) << j))] = amp;
      break;
    }
    case StateKind::GHZ:
      psi[0] = 1.0 / std::sqrt(2.0);
      psi[dim - 1] = 1.0 / std::sqrt(2.0);
      break;
    case StateKind::Neel: {
      if (sites % 2 != 0) throw ConfigError("make_state: Neel needs an even site count");
      std::uint64_t b = 0;
      for (int j = 0; j < sites; j += 2) b |= std::uint64_t(1) << j;  // up at even sites
      psi[Eigen::Index(b)] = 1.0;
      break;
    }
    case StateKind::custom:
      throw ConfigError("make_state: custom states need a bitstring or amplitudes");
  }
  return psi;
}

Eigen::VectorXcd make_state_bits(const std::string& bits, int sites) {
  if (static_cast<int>(bits.size()) != sites)
    throw ConfigError("make_state: bitstring length must equal the site count");
  std::uint64_t b = 0;
  for (int j = 0; j < sites; ++j) {
    if (bits[j] == '1') b |= std::uint64_t(1) << j;
    else if (bits[j] != '0') throw ConfigError("make_state: bitstring must be 0/1");
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index(1) << sites);
  psi[Eigen::Index(b)] = 1.0;
  return psi;
}

Eigen::VectorXcd make_state_amplitudes(const Eigen::VectorXcd& amplitudes) {
  const double norm = amplitudes.norm();
  if (norm < 1e-14) throw ConfigError("make_state: zero-norm amplitude vector");
  return amplitudes / norm;
}

FidelitySeries fidelity_series(const spectral::Spectrum& spec, const Eigen::VectorXcd& psi0,
                               std::vector<double> times) {
  if (!spec.has_vectors()) throw ConfigError("fidelity_series: spectrum carries no vectors");
  if (spec.vectors.rows() != psi0.size())
    throw ConfigError("fidelity_series: dimension mismatch");
  for (double t : times)
    if (!std::isfinite(t)) throw ConfigError("fidelity_series: non-finite time");

  const Eigen::VectorXcd coeffs = spec.vectors.adjoint() * psi0;
  const Eigen::VectorXd weights = coeffs.cwiseAbs2();
  FidelitySeries series;
  series.values = kernels::omp::phase_sum_curve(weights, spec.energies, times);
  series.times = std::move(times);
  return series;
}

RevivalMetrics revival_metrics(const FidelitySeries& series, double threshold) {
  if (series.values.empty()) throw ConfigError("revival_metrics: empty series");
  RevivalMetrics metrics;
  metrics.min_fidelity = series.values[0];
  for (double v : series.values) metrics.min_fidelity = std::min(metrics.min_fidelity, v);
  metrics.revival_peaks = kernels::local_maxima(series.times, series.values, 0.0);
  for (std::size_t i = 0; i < series.values.size(); ++i)
    if (series.values[i] < threshold) {
      metrics.decay_time = series.times[i];
      break;
    }
  return metrics;
}

std::vector<double> uniform_times(double tmax, int points) {
  if (points < 2 || tmax <= 0.0) throw ConfigError("uniform_times: bad grid");
  std::vector<double> times(points);
  for (int i = 0; i < points; ++i) times[i] = tmax * double(i) / double(points - 1);
  return times;
}

}  // namespace scarlab::dynamics
