#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace scarlab::levelstats {

enum class Scope { whole_spectrum, m_sector };

struct LevelSet {
  Eigen::VectorXd energies;  // ascending
  Scope scope = Scope::whole_spectrum;
  double m = 0.0;            // meaningful for m_sector scope
  std::string provenance;
};

struct GapRatioStat {
  double mean_r = 0.0;
  std::vector<double> per_level_r;
  std::int64_t dropped_degenerate = 0;
};

/// r_l = min(s_l, s_{l+1}) / max(s_l, s_{l+1}) averaged over l, with
/// s_l = E_l - E_{l-1}. Pairs where either spacing falls below the
/// degeneracy cut are dropped and counted (r is undefined at s = 0).
GapRatioStat gap_ratios(const LevelSet& levels, double degeneracy_cut = 1e-10);

enum class NormalizeMode { mean_spacing, polynomial_unfolding };

/// mean_spacing divides raw spacings by their mean; polynomial_unfolding
/// fits the integrated level count with a degree-`degree` polynomial
/// (Chebyshev basis on the rescaled spectrum) and differences the fit.
std::vector<double> normalize_spacings(const LevelSet& levels, NormalizeMode mode,
                                       int degree = 10);

struct SpacingHistogram {
  std::vector<double> bin_edges;  // bins+1 entries
  std::vector<double> densities;  // normalized: sum density*width = 1
  std::int64_t sample_count = 0;
};

/// Density histogram of spacings over [0, s_max]; samples beyond s_max are
/// counted in sample_count but not binned.
SpacingHistogram spacing_histogram(std::span<const double> s_values, int bins = 40,
                                   double s_max = 4.0);

enum class ReferenceKind { poisson, goe, gue };

/// Poisson e^-s, GOE (pi/2) s e^{-pi s^2/4}, GUE (32/pi^2) s^2 e^{-4 s^2/pi}.
double reference_pdf(ReferenceKind kind, double s);

/// Comparison constants 0.39 / 0.53 / 0.60.
double reference_r(ReferenceKind kind);

/// L1 distance between the histogram and the reference density evaluated at
/// bin midpoints: sum |density - ref(mid)| * width.
double l1_distance(const SpacingHistogram& histo, ReferenceKind kind);

const char* reference_name(ReferenceKind kind);

}  // namespace scarlab::levelstats
