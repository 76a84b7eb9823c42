// SPDX-License-Identifier: Apache-2.0
#include "compsel/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "compsel/errors.hpp"

namespace compsel {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double apothem(const NetworkGeometry& geom) { return geom.hex_radius * kSqrt3 / 2.0; }

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

NetworkGeometry build_cluster(std::size_t num_bs, double cell_radius,
                              const ClusterOptions& options) {
  if (!(cell_radius > 0.0)) throw ConfigError("cell radius must be positive");
  if (!(options.pathloss_exponent > 2.0))
    throw ConfigError("path-loss exponent must exceed 2");
  if (!(options.reference_gain > 0.0)) throw ConfigError("reference gain must be positive");

  NetworkGeometry geom;
  geom.cell_radius = cell_radius;
  geom.pathloss_exponent = options.pathloss_exponent;
  geom.reference_gain = options.reference_gain;

  switch (num_bs) {
    case 1:
      geom.hex_radius = cell_radius;
      geom.bs_positions = {Point{0.0, 0.0}};
      break;
    case 3: {
      if (!(options.site_spacing > 0.0)) throw ConfigError("site spacing must be positive");
      // Adjacent hexagons sharing a corner have centers sqrt(3) circumradii apart.
      geom.hex_radius = options.site_spacing * cell_radius / kSqrt3;
      for (double deg : {90.0, 210.0, 330.0}) {
        const double rad = deg * std::numbers::pi / 180.0;
        geom.bs_positions.push_back(
            {geom.hex_radius * std::cos(rad), geom.hex_radius * std::sin(rad)});
      }
      break;
    }
    default:
      throw ConfigError("unsupported cluster size " + std::to_string(num_bs) +
                        " (supported: 1, 3)");
  }
  return geom;
}

bool in_hexagon(const NetworkGeometry& geom, std::size_t cell, Point p) {
  const Point c = geom.bs_positions.at(cell);
  const double dx = std::abs(p.x - c.x);
  const double dy = std::abs(p.y - c.y);
  const double eps = 1e-9 * geom.hex_radius;
  return dx <= apothem(geom) + eps && dy <= geom.hex_radius - dx / kSqrt3 + eps;
}

double ray_length(const NetworkGeometry& geom, std::size_t cell, double bearing) {
  (void)geom.bs_positions.at(cell);
  // Edge normals of a pointy-top hexagon sit at multiples of 60 degrees.
  double max_cos = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double normal = k * std::numbers::pi / 3.0;
    max_cos = std::max(max_cos, std::abs(std::cos(bearing - normal)));
  }
  return apothem(geom) / max_cos;
}

double bearing_to_cluster_center(const NetworkGeometry& geom, std::size_t cell) {
  const Point c = geom.bs_positions.at(cell);
  if (std::hypot(c.x, c.y) == 0.0) return 0.0;
  return std::atan2(-c.y, -c.x);
}

Point point_on_ray(const NetworkGeometry& geom, std::size_t cell, double bearing,
                   double dist) {
  const Point c = geom.bs_positions.at(cell);
  return {c.x + dist * std::cos(bearing), c.y + dist * std::sin(bearing)};
}

UserDrop drop_users(const NetworkGeometry& geom, std::size_t users_per_cell,
                    double min_dist, std::mt19937_64& rng) {
  if (users_per_cell < 1) throw ConfigError("need at least one user per cell");
  if (!(min_dist >= 0.0 && min_dist < geom.cell_radius))
    throw ConfigError("min_dist must lie in [0, R)");

  const double half_w = apothem(geom);
  std::uniform_real_distribution<double> ux(-half_w, half_w);
  std::uniform_real_distribution<double> uy(-geom.hex_radius, geom.hex_radius);

  UserDrop drop;
  drop.positions.reserve(users_per_cell * geom.num_bs());
  drop.serving_bs.reserve(users_per_cell * geom.num_bs());
  for (std::size_t cell = 0; cell < geom.num_bs(); ++cell) {
    const Point c = geom.bs_positions[cell];
    for (std::size_t k = 0; k < users_per_cell;) {
      const Point p{c.x + ux(rng), c.y + uy(rng)};
      if (!in_hexagon(geom, cell, p) || distance(p, c) < min_dist) continue;
      drop.positions.push_back(p);
      drop.serving_bs.push_back(cell);
      ++k;
    }
  }
  return drop;
}

double LinkGains::interference_sum() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < alpha_sq.size(); ++i)
    if (i != serving) sum += alpha_sq[i];
  return sum;
}

double LinkGains::total() const {
  return std::accumulate(alpha_sq.begin(), alpha_sq.end(), 0.0);
}

LinkGains link_gains(const NetworkGeometry& geom, Point pos) {
  LinkGains gains;
  gains.alpha_sq.reserve(geom.num_bs());
  double nearest = 0.0;
  for (std::size_t i = 0; i < geom.num_bs(); ++i) {
    const double d = distance(pos, geom.bs_positions[i]);
    if (d <= 0.0) throw DomainError("user coincides with a base station");
    gains.alpha_sq.push_back(geom.reference_gain *
                             std::pow(geom.cell_radius / d, geom.pathloss_exponent));
    if (i == 0 || d < nearest) {
      nearest = d;
      gains.serving = i;
    }
  }
  return gains;
}

void apply_shadowing(LinkGains& gains, double sigma_db, std::mt19937_64& rng) {
  if (sigma_db <= 0.0) return;
  std::normal_distribution<double> shadow_db(0.0, sigma_db);
  for (double& g : gains.alpha_sq) g *= db_to_linear(shadow_db(rng));
}

double noise_power(double tx_power, double reference_gain, double snr_edge_db) {
  if (!(tx_power > 0.0)) throw DomainError("transmit power must be positive");
  return tx_power * reference_gain / db_to_linear(snr_edge_db);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace compsel
