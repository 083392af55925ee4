#include "scarlab/fields.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "scarlab/errors.hpp"

namespace scarlab::spin {

namespace {

// Open-interval uniform on (-b, b): u = (bits>>11 + 0.5) / 2^53 lies
// strictly inside (0, 1), so 2u - 1 never reaches +-1. The mapping avoids
// std::uniform_real_distribution, whose output is implementation-defined.
double draw_open(std::mt19937_64& rng, double halfwidth) {
  const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  return (2.0 * u - 1.0) * halfwidth + 0.0;  // +0.0 normalizes -0.0
}

}  // namespace

FieldRealization sample_fields(int sites, double x_halfwidth, double y_halfwidth,
                               double h, std::uint64_t seed) {
  if (sites < 1) throw ConfigError("sample_fields: need at least one site");
  if (x_halfwidth < 0 || y_halfwidth < 0)
    throw ConfigError("sample_fields: half-widths must be nonnegative");
  FieldRealization real;
  real.sites = sites;
  real.h = h;
  real.x_halfwidth = x_halfwidth;
  real.y_halfwidth = y_halfwidth;
  real.seed = seed;
  real.xs.reserve(sites);
  real.ys.reserve(sites);
  std::mt19937_64 rng(seed);
  for (int j = 0; j < sites; ++j) real.xs.push_back(draw_open(rng, x_halfwidth));
  for (int j = 0; j < sites; ++j) real.ys.push_back(draw_open(rng, y_halfwidth));
  return real;
}

std::string to_text(const FieldRealization& real) {
  nlohmann::json j;
  j["generator"] = kGeneratorId;
  j["sites"] = real.sites;
  j["seed"] = real.seed;
  j["h"] = real.h;
  j["x_halfwidth"] = real.x_halfwidth;
  j["y_halfwidth"] = real.y_halfwidth;
  j["xs"] = real.xs;
  j["ys"] = real.ys;
  return j.dump(2);
}

FieldRealization from_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FieldRealization real;
  real.sites = j.at("sites").get<int>();
  real.seed = j.at("seed").get<std::uint64_t>();
  real.h = j.at("h").get<double>();
  real.x_halfwidth = j.at("x_halfwidth").get<double>();
  real.y_halfwidth = j.at("y_halfwidth").get<double>();
  real.xs = j.at("xs").get<std::vector<double>>();
  real.ys = j.at("ys").get<std::vector<double>>();
  if (static_cast<int>(real.xs.size()) != real.sites ||
      static_cast<int>(real.ys.size()) != real.sites)
    throw ConfigError("field record: site count mismatch");
  return real;
}

}  // namespace scarlab::spin
