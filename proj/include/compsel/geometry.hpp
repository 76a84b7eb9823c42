// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace compsel {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

/// Layout of a cooperative cluster of hexagonal cells.
///
/// `cell_radius` is the path-loss reference distance R (the distance at which
/// the link gain equals `reference_gain`). `hex_radius` is the circumradius of
/// each hexagon; the default layout has `hex_radius == cell_radius`. All cells
/// use pointy-top hexagons centered on their base station.
struct NetworkGeometry {
  std::vector<Point> bs_positions;
  double cell_radius = 250.0;
  double hex_radius = 250.0;
  double pathloss_exponent = 3.76;
  double reference_gain = 1.0;

  std::size_t num_bs() const { return bs_positions.size(); }
};

struct ClusterOptions {
  double pathloss_exponent = 3.76;
  double reference_gain = 1.0;
  /// Inter-site distance in units of R. sqrt(3) puts the three hexagons of
  /// circumradius R around one shared corner; 2 makes R the hexagon apothem.
  double site_spacing = 1.7320508075688772;
};

/// B = 1: one BS at the origin. B = 3: three hexagons sharing a corner at the
/// origin, BSs at bearings 90, 210 and 330 degrees.
NetworkGeometry build_cluster(std::size_t num_bs, double cell_radius,
                              const ClusterOptions& options = {});

bool in_hexagon(const NetworkGeometry& geom, std::size_t cell, Point p);

/// Distance from a BS to the border of its own hexagon along `bearing` (rad).
double ray_length(const NetworkGeometry& geom, std::size_t cell, double bearing);

/// Bearing from a BS toward the cluster center (the shared corner). For a
/// single-cell cluster this is 0.
double bearing_to_cluster_center(const NetworkGeometry& geom, std::size_t cell);

Point point_on_ray(const NetworkGeometry& geom, std::size_t cell, double bearing,
                   double dist);

struct UserDrop {
  std::vector<Point> positions;
  std::vector<std::size_t> serving_bs;

  std::size_t size() const { return positions.size(); }
};

/// Drops `users_per_cell` users uniformly over every hexagon (rejection from
/// the bounding box), never closer than `min_dist` to the serving BS. Users
/// are stored cell-major.
UserDrop drop_users(const NetworkGeometry& geom, std::size_t users_per_cell,
                    double min_dist, std::mt19937_64& rng);

/// Large-scale power gains from every BS of the cluster to one user.
struct LinkGains {
  std::vector<double> alpha_sq;
  std::size_t serving = 0;

  double serving_gain() const { return alpha_sq.at(serving); }
  /// Sum over the non-serving BSs.
  double interference_sum() const;
  double total() const;
};

/// alpha^2_i = alpha_0^2 (R / d_i)^tau; the serving BS is the nearest one.
LinkGains link_gains(const NetworkGeometry& geom, Point pos);

/// Multiplies every gain by an independent log-normal factor with the given
/// standard deviation in dB. The serving index is left unchanged.
void apply_shadowing(LinkGains& gains, double sigma_db, std::mt19937_64& rng);

/// sigma^2 such that a user at distance R sees `snr_edge_db` from one BS.
double noise_power(double tx_power, double reference_gain, double snr_edge_db);

double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace compsel
