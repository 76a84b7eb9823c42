// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "compsel/geometry.hpp"
#include "compsel/mode.hpp"
#include "compsel/rng.hpp"
#include "compsel/scheduling.hpp"

namespace compsel {

enum class EtaMode {
  Approximate,  ///< eta evaluated at the mean SINR of orthogonal users
  Accurate,     ///< eta evaluated at the mean SINR including E{lambda}, E{delta}
};

/// Everything the per-user rule needs besides the user's own gains.
struct RuleConfig {
  double tx_power = 1.0;
  double noise = 0.1;
  std::size_t num_bs = 3;
  std::size_t num_antennas = 4;
  /// Co-scheduled users per BS as assumed by the user (M or its estimate M').
  std::size_t users_per_bs = 2;
  double overhead_comp = 0.0;
  double overhead_noncomp = 0.0;
  SchedulerKind scheduler = SchedulerKind::Sus;
  /// SUS semi-orthogonality filter used by the Monte Carlo reference selector.
  std::optional<double> sus_threshold;
  EtaMode eta_mode = EtaMode::Approximate;
  /// Replaces the scheduler's default E{lambda}/E{delta} in the threshold.
  std::optional<double> orthogonality_ratio;
  /// E{lambda}, E{delta} used by EtaMode::Accurate. Defaults to the
  /// random-scheduling closed forms.
  std::optional<OrthogonalityEstimate> eta_orthogonality;
};

struct DecisionVariable {
  double value = 1.0;
  double term_a = 0.0;  ///< sum_{i != b} alpha_i^2 / alpha_b^2
  double term_b = 0.0;  ///< INR: P sum_{i != b} alpha_i^2 / sigma^2
};

DecisionVariable decision_variable(const LinkGains& gains, double tx_power, double noise);

struct Threshold {
  double value = 1.0;
  double eta_ratio = 1.0;           ///< T_eta = eta^NC / eta^C
  double orthogonality_ratio = 1.0;  ///< T_o = E{lambda} / E{delta}
};

Threshold threshold(const LinkGains& gains, const RuleConfig& config);

struct ModeDecision {
  double term_a = 0.0;
  double term_b = 0.0;
  double decision_variable = 1.0;
  double threshold = 1.0;
  Mode mode = Mode::NonCoMP;
};

/// CoMP iff (1 + a)(1 + b) > T_eta T_o; ties select Non-CoMP.
ModeDecision select_mode(const LinkGains& gains, const RuleConfig& config);

/// Same rule evaluated as eta^C E{gamma^C} > eta^NC E{gamma^NC}.
Mode select_mode_by_rates(const LinkGains& gains, const RuleConfig& config);

enum class BoundaryKind { Crossing, AllCoMP, AllNonCoMP };

struct SwitchingResult {
  BoundaryKind kind = BoundaryKind::Crossing;
  double distance = 0.0;  ///< meters from the serving BS; valid for Crossing

  /// Throws NoBoundaryError unless kind == Crossing.
  double value() const;
};

/// Decision variable minus threshold, in dB, for a point `dist` meters from
/// BS `cell` along `bearing`.
double decision_margin_db(const NetworkGeometry& geom, std::size_t cell, double bearing,
                          double dist, const RuleConfig& config);

/// Bisection for the point where the decision variable meets the threshold
/// along a ray from BS `cell`, between `min_dist` and the hexagon border.
SwitchingResult switching_distance(const NetworkGeometry& geom, std::size_t cell, double bearing,
                                   const RuleConfig& config, double min_dist = 1.0,
                                   double tolerance = 1e-3);

/// |d(M_est) - d(M_true)|. Zero when neither ray has a boundary and both agree
/// on the mode; throws NoBoundaryError when only one of them has a boundary.
double switching_distance_error(const NetworkGeometry& geom, std::size_t cell, double bearing,
                                const RuleConfig& config, std::size_t m_true, std::size_t m_est,
                                double min_dist = 1.0);

enum class ReferenceKind {
  SimulatedRate,  ///< compare Monte Carlo means of the net rates
  UpperBound,     ///< compare Jensen bounds at the Monte Carlo mean SINRs
};

/// Reference selector from SINR samples of the same user under both modes.
Mode select_mode_from_samples(ReferenceKind kind, double overhead_comp, double overhead_noncomp,
                              std::span<const double> sinr_comp,
                              std::span<const double> sinr_noncomp);

/// Monte Carlo reference selector for one user with a given partner pool.
/// The user's partners are chosen per block by the configured scheduler.
Mode select_mode_reference(ReferenceKind kind, const LinkGains& user,
                           std::span<const LinkGains> partner_pool, const RuleConfig& config,
                           Stream& rng, std::size_t trials);

}  // namespace compsel
