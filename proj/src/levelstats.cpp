#include "scarlab/levelstats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scarlab/errors.hpp"

namespace scarlab::levelstats {

GapRatioStat gap_ratios(const LevelSet& levels, double degeneracy_cut) {
  const Eigen::Index n = levels.energies.size();
  if (n < 3) throw ConfigError("gap_ratios: need at least 3 levels");
  GapRatioStat stat;
  for (Eigen::Index l = 1; l + 1 < n; ++l) {
    const double s0 = levels.energies[l] - levels.energies[l - 1];
    const double s1 = levels.energies[l + 1] - levels.energies[l];
    if (s0 < degeneracy_cut || s1 < degeneracy_cut) {
      ++stat.dropped_degenerate;
      continue;
    }
    stat.per_level_r.push_back(std::min(s0, s1) / std::max(s0, s1));
  }
  if (stat.per_level_r.empty())
    throw ConfigError("gap_ratios: every spacing pair fell below the degeneracy cut");
  double sum = 0.0;
  for (double r : stat.per_level_r) sum += r;
  stat.mean_r = sum / static_cast<double>(stat.per_level_r.size());
  return stat;
}

namespace {

// Chebyshev T_k on the spectrum rescaled to [-1, 1]; least-squares fit of
// the integrated level count.
Eigen::VectorXd chebyshev_fit(const Eigen::VectorXd& energies, int degree) {
  const Eigen::Index n = energies.size();
  const double lo = energies[0], hi = energies[n - 1];
  if (hi - lo <= 0.0) throw ConfigError("normalize_spacings: degenerate fit (zero span)");
  Eigen::MatrixXd basis(n, degree + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = 2.0 * (energies[i] - lo) / (hi - lo) - 1.0;
    basis(i, 0) = 1.0;
    if (degree >= 1) basis(i, 1) = t;
    for (int k = 2; k <= degree; ++k) basis(i, k) = 2.0 * t * basis(i, k - 1) - basis(i, k - 2);
  }
  Eigen::VectorXd counts(n);
  for (Eigen::Index i = 0; i < n; ++i) counts[i] = static_cast<double>(i) + 0.5;
  return basis.householderQr().solve(counts);
}

double chebyshev_eval(const Eigen::VectorXd& coeffs, double lo, double hi, double e) {
  const double t = 2.0 * (e - lo) / (hi - lo) - 1.0;
  double tm2 = 1.0, tm1 = t, out = coeffs[0];
  if (coeffs.size() > 1) out += coeffs[1] * t;
  for (Eigen::Index k = 2; k < coeffs.size(); ++k) {
    const double tk = 2.0 * t * tm1 - tm2;
    out += coeffs[k] * tk;
    tm2 = tm1;
    tm1 = tk;
  }
  return out;
}

}  // namespace

std::vector<double> normalize_spacings(const LevelSet& levels, NormalizeMode mode, int degree) {
  const Eigen::Index n = levels.energies.size();
  if (n < 3) throw ConfigError("normalize_spacings: need at least 3 levels");
  std::vector<double> out;
  out.reserve(n - 1);
  if (mode == NormalizeMode::mean_spacing) {
    const double mean = (levels.energies[n - 1] - levels.energies[0]) / double(n - 1);
    if (mean <= 0.0) throw ConfigError("normalize_spacings: degenerate fit (zero span)");
    for (Eigen::Index i = 1; i < n; ++i)
      out.push_back((levels.energies[i] - levels.energies[i - 1]) / mean);
    return out;
  }
  if (degree < 1) throw ConfigError("normalize_spacings: polynomial degree must be >= 1");
  const Eigen::VectorXd coeffs = chebyshev_fit(levels.energies, degree);
  const double lo = levels.energies[0], hi = levels.energies[n - 1];
  double prev = chebyshev_eval(coeffs, lo, hi, levels.energies[0]);
  for (Eigen::Index i = 1; i < n; ++i) {
    const double cur = chebyshev_eval(coeffs, lo, hi, levels.energies[i]);
    out.push_back(cur - prev);
    prev = cur;
  }
  return out;
}

SpacingHistogram spacing_histogram(std::span<const double> s_values, int bins, double s_max) {
  if (s_values.empty()) throw ConfigError("spacing_histogram: empty input");
  if (bins < 1 || s_max <= 0.0) throw ConfigError("spacing_histogram: bad binning");
  for (double s : s_values)
    if (s < 0.0) throw ConfigError("spacing_histogram: negative spacing");

  SpacingHistogram histo;
  histo.sample_count = static_cast<std::int64_t>(s_values.size());
  const double width = s_max / bins;
  histo.bin_edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) histo.bin_edges[b] = b * width;
  std::vector<std::int64_t> counts(bins, 0);
  std::int64_t in_range = 0;
  for (double s : s_values) {
    if (s > s_max) continue;
    int b = std::min(bins - 1, static_cast<int>(s / width));
    ++counts[b];
    ++in_range;
  }
  if (in_range == 0) throw ConfigError("spacing_histogram: no samples in [0, s_max]");
  histo.densities.resize(bins);
  for (int b = 0; b < bins; ++b)
    histo.densities[b] = static_cast<double>(counts[b]) / (static_cast<double>(in_range) * width);
  return histo;
}

double reference_pdf(ReferenceKind kind, double s) {
  if (s < 0.0) throw ConfigError("reference_pdf: negative s");
  constexpr double pi = std::numbers::pi;
  switch (kind) {
    case ReferenceKind::poisson: return std::exp(-s);
    case ReferenceKind::goe: return 0.5 * pi * s * std::exp(-0.25 * pi * s * s);
    case ReferenceKind::gue: return (32.0 / (pi * pi)) * s * s * std::exp(-4.0 * s * s / pi);
  }
  return 0.0;
}

double reference_r(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::poisson: return 0.39;
    case ReferenceKind::goe: return 0.53;
    case ReferenceKind::gue: return 0.60;
  }
  return 0.0;
}

const char* reference_name(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::poisson: return "poisson";
    case ReferenceKind::goe: return "goe";
    case ReferenceKind::gue: return "gue";
  }
  return "?";
}

double l1_distance(const SpacingHistogram& histo, ReferenceKind kind) {
  double total = 0.0;
  for (std::size_t b = 0; b + 1 < histo.bin_edges.size(); ++b) {
    const double width = histo.bin_edges[b + 1] - histo.bin_edges[b];
    const double mid = 0.5 * (histo.bin_edges[b] + histo.bin_edges[b + 1]);
    total += std::abs(histo.densities[b] - reference_pdf(kind, mid)) * width;
  }
  return total;
}

}  // namespace scarlab::levelstats
