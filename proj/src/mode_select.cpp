// SPDX-License-Identifier: Apache-2.0
#include "compsel/mode_select.hpp"

#include <cmath>
#include <numeric>

#include "compsel/errors.hpp"
#include "compsel/link_sim.hpp"
#include "compsel/throughput.hpp"

namespace compsel {

namespace {

// E{lambda}, E{delta} entering the mean SINRs on each side of the comparison.
OrthogonalityEstimate threshold_orthogonality(const RuleConfig& c) {
  if (c.orthogonality_ratio) return {*c.orthogonality_ratio, 1.0};
  const auto model =
      c.scheduler == SchedulerKind::Random ? OrthogonalityModel::Random : OrthogonalityModel::LargePool;
  return {expected_orthogonality(model, c.num_bs, c.num_antennas, c.users_per_bs, Mode::NonCoMP),
          expected_orthogonality(model, c.num_bs, c.num_antennas, c.users_per_bs, Mode::CoMP)};
}

OrthogonalityEstimate eta_orthogonality(const RuleConfig& c) {
  if (c.eta_mode == EtaMode::Approximate) return {1.0, 1.0};
  if (c.eta_orthogonality) return *c.eta_orthogonality;
  return {expected_orthogonality(OrthogonalityModel::Random, c.num_bs, c.num_antennas,
                                 c.users_per_bs, Mode::NonCoMP),
          expected_orthogonality(OrthogonalityModel::Random, c.num_bs, c.num_antennas,
                                 c.users_per_bs, Mode::CoMP)};
}

struct EtaPair {
  double comp;
  double noncomp;
};

EtaPair etas(const LinkGains& gains, const RuleConfig& c) {
  const auto orth = eta_orthogonality(c);
  const double g_comp = mean_sinr_approx(Mode::CoMP, gains, c.tx_power, c.noise, c.num_antennas,
                                         c.users_per_bs, orth.delta);
  const double g_nc = mean_sinr_approx(Mode::NonCoMP, gains, c.tx_power, c.noise,
                                       c.num_antennas, c.users_per_bs, orth.lambda);
  return {eta(c.overhead_comp, g_comp), eta(c.overhead_noncomp, g_nc)};
}

double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

DecisionVariable decision_variable(const LinkGains& gains, double tx_power, double noise) {
  const double serving = gains.serving_gain();
  if (!(serving > 0.0)) throw DomainError("serving gain must be positive");
  const double interference = gains.interference_sum();
  DecisionVariable dv;
  dv.term_a = interference / serving;
  dv.term_b = tx_power * interference / noise;
  dv.value = (1.0 + dv.term_a) * (1.0 + dv.term_b);
  return dv;
}

Threshold threshold(const LinkGains& gains, const RuleConfig& config) {
  if (config.users_per_bs < 1) throw ConfigError("M estimate must be at least 1");
  const auto orth = threshold_orthogonality(config);
  const auto e = etas(gains, config);
  Threshold t;
  t.orthogonality_ratio = orth.lambda / orth.delta;
  t.eta_ratio = e.noncomp / e.comp;
  t.value = t.eta_ratio * t.orthogonality_ratio;
  return t;
}

ModeDecision select_mode(const LinkGains& gains, const RuleConfig& config) {
  const auto dv = decision_variable(gains, config.tx_power, config.noise);
  const auto t = threshold(gains, config);
  ModeDecision d;
  d.term_a = dv.term_a;
  d.term_b = dv.term_b;
  d.decision_variable = dv.value;
  d.threshold = t.value;
  d.mode = dv.value > t.value ? Mode::CoMP : Mode::NonCoMP;
  return d;
}

Mode select_mode_by_rates(const LinkGains& gains, const RuleConfig& config) {
  const auto orth = threshold_orthogonality(config);
  const auto e = etas(gains, config);
  const double g_comp = mean_sinr_approx(Mode::CoMP, gains, config.tx_power, config.noise,
                                         config.num_antennas, config.users_per_bs, orth.delta);
  const double g_nc = mean_sinr_approx(Mode::NonCoMP, gains, config.tx_power, config.noise,
                                       config.num_antennas, config.users_per_bs, orth.lambda);
  return e.comp * g_comp > e.noncomp * g_nc ? Mode::CoMP : Mode::NonCoMP;
}

double SwitchingResult::value() const {
  if (kind != BoundaryKind::Crossing)
    throw NoBoundaryError(kind == BoundaryKind::AllCoMP ? "whole ray selects CoMP"
                                                        : "whole ray selects Non-CoMP");
  return distance;
}

double decision_margin_db(const NetworkGeometry& geom, std::size_t cell, double bearing,
                          double dist, const RuleConfig& config) {
  LinkGains gains = link_gains(geom, point_on_ray(geom, cell, bearing, dist));
  gains.serving = cell;
  const auto dv = decision_variable(gains, config.tx_power, config.noise);
  return linear_to_db(dv.value) - linear_to_db(threshold(gains, config).value);
}

SwitchingResult switching_distance(const NetworkGeometry& geom, std::size_t cell, double bearing,
                                   const RuleConfig& config, double min_dist, double tolerance) {
  double lo = std::max(min_dist, 1e-6 * geom.cell_radius);
  double hi = ray_length(geom, cell, bearing);
  if (!(lo < hi)) throw DomainError("ray shorter than the minimum distance");
  const double f_lo = decision_margin_db(geom, cell, bearing, lo, config);
  const double f_hi = decision_margin_db(geom, cell, bearing, hi, config);
  if (f_lo > 0.0 && f_hi > 0.0) return {BoundaryKind::AllCoMP, 0.0};
  if (f_lo <= 0.0 && f_hi <= 0.0) return {BoundaryKind::AllNonCoMP, 0.0};

  // Keep the sign convention f(lo) <= 0 < f(hi) or its mirror.
  const bool rising = f_hi > 0.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const bool comp = decision_margin_db(geom, cell, bearing, mid, config) > 0.0;
    if (comp == rising)
      hi = mid;
    else
      lo = mid;
  }
  return {BoundaryKind::Crossing, 0.5 * (lo + hi)};
}

double switching_distance_error(const NetworkGeometry& geom, std::size_t cell, double bearing,
                                const RuleConfig& config, std::size_t m_true, std::size_t m_est,
                                double min_dist) {
  RuleConfig truth = config;
  truth.users_per_bs = m_true;
  RuleConfig guess = config;
  guess.users_per_bs = m_est;
  const auto a = switching_distance(geom, cell, bearing, truth, min_dist);
  const auto b = switching_distance(geom, cell, bearing, guess, min_dist);
  if (a.kind == BoundaryKind::Crossing && b.kind == BoundaryKind::Crossing)
    return std::abs(a.distance - b.distance);
  if (a.kind == b.kind) return 0.0;
  throw NoBoundaryError("switching boundary exists for only one of the two M values");
}

Mode select_mode_from_samples(ReferenceKind kind, double overhead_comp, double overhead_noncomp,
                              std::span<const double> sinr_comp,
                              std::span<const double> sinr_noncomp) {
  if (sinr_comp.empty() || sinr_noncomp.empty()) throw ConfigError("need SINR samples");
  double comp = 0.0;
  double nc = 0.0;
  if (kind == ReferenceKind::UpperBound) {
    comp = jensen_bound(overhead_comp, mean(sinr_comp));
    nc = jensen_bound(overhead_noncomp, mean(sinr_noncomp));
  } else {
    for (double s : sinr_comp) comp += net_rate(overhead_comp, s);
    for (double s : sinr_noncomp) nc += net_rate(overhead_noncomp, s);
    comp /= static_cast<double>(sinr_comp.size());
    nc /= static_cast<double>(sinr_noncomp.size());
  }
  return comp > nc ? Mode::CoMP : Mode::NonCoMP;
}

Mode select_mode_reference(ReferenceKind kind, const LinkGains& user,
                           std::span<const LinkGains> partner_pool, const RuleConfig& config,
                           Stream& rng, std::size_t trials) {
  if (trials < 1) throw ConfigError("need at least one trial");
  std::vector<LinkGains> gains{user};
  gains.insert(gains.end(), partner_pool.begin(), partner_pool.end());

  std::vector<std::size_t> everyone;
  std::vector<std::size_t> same_cell;
  for (std::size_t u = 1; u < gains.size(); ++u) {
    everyone.push_back(u);
    if (gains[u].serving == user.serving) same_cell.push_back(u);
  }

  LinkParams params;
  params.tx_power = config.tx_power;
  params.noise = config.noise;
  params.num_bs = config.num_bs;
  params.num_antennas = config.num_antennas;
  params.users_per_bs = config.users_per_bs;
  params.scheduler = config.scheduler;
  params.sus_threshold = config.sus_threshold;

  std::vector<double> comp(trials);
  std::vector<double> nc(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const BlockChannels block = draw_block(gains, config.num_antennas, rng);
    comp[t] = comp_sinr(0, everyone, block, params, rng);
    nc[t] = noncomp_sinr(0, same_cell, block, gains, params, rng);
  }
  return select_mode_from_samples(kind, config.overhead_comp, config.overhead_noncomp, comp, nc);
}

}  // namespace compsel
