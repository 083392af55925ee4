#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scarlab::spin {

/// Identifier of the draw algorithm recorded in run manifests: mt19937_64
/// with the 53-bit open-interval mapping u = (bits>>11 + 0.5) / 2^53.
inline constexpr const char* kGeneratorId = "mt19937_64/u53-open";

/// One seeded draw of per-site transverse fields plus the uniform z-field.
/// x_j ~ Uniform(-x, x) strictly inside the interval, likewise y_j; the
/// x values are drawn first (sites 0..N-1), then the y values.
struct FieldRealization {
  int sites = 0;
  double h = 0.0;
  double x_halfwidth = 0.0;
  double y_halfwidth = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> xs;
  std::vector<double> ys;
};

FieldRealization sample_fields(int sites, double x_halfwidth, double y_halfwidth,
                               double h, std::uint64_t seed);

/// JSON text record carrying seed, bounds, h and the drawn values, exact on
/// round trip.
std::string to_text(const FieldRealization& real);
FieldRealization from_text(const std::string& text);

}  // namespace scarlab::spin
