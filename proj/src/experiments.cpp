// SPDX-License-Identifier: Apache-2.0
#include "compsel/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "compsel/errors.hpp"
#include "compsel/link_sim.hpp"
#include "compsel/throughput.hpp"

namespace compsel {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Report make_report(std::string id, const ExperimentConfig& config) {
  Report r;
  r.id = std::move(id);
  r.seed = config.seed;
  r.config = describe(config);
  return r;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

double crossing_or_nan(const SwitchingResult& s) {
  return s.kind == BoundaryKind::Crossing ? s.distance : kNaN;
}

std::string crossing_note(const SwitchingResult& s) {
  switch (s.kind) {
    case BoundaryKind::Crossing: return fmt(s.distance);
    case BoundaryKind::AllCoMP: return "all_comp";
    case BoundaryKind::AllNonCoMP: return "all_noncomp";
  }
  return "?";
}

std::vector<Column> fig1_columns() {
  return {
      {"snr_db", "cell-edge SNR in dB"},
      {"distance_m", "distance from BS 0 along the ray toward the cluster center"},
      {"decision_variable_db", "(1+a)(1+b) in dB"},
      {"analytic_threshold_db", "T_eta T_o in dB with the scheduler's closed-form T_o"},
      {"simulated_threshold_db", "T_eta T_o in dB with T_o from the SUS Monte Carlo estimate"},
  };
}

std::vector<Column> fig2_columns() {
  return {
      {"snr_db", "cell-edge SNR in dB"},
      {"m_est", "co-scheduled users per BS assumed by the user"},
      {"distance_true_m", "switching distance with the true M (nan: no boundary)"},
      {"distance_est_m", "switching distance with M_est (nan: no boundary)"},
      {"distance_error_m", "|distance_est - distance_true| (nan: boundary exists for one only)"},
  };
}

std::vector<Column> fig3_columns() {
  return {
      {"coherence_uses", "channel uses per coherence block C"},
      {"beta", "common-pilot sparsity factor under CoMP"},
      {"snr_db", "cell-edge SNR in dB"},
      {"percent_comp", "percentage of dropped users selecting CoMP"},
  };
}

std::vector<Column> fig4_columns() {
  return {
      {"snr_db", "cell-edge SNR in dB"},
      {"comp_share", "fraction of users selecting CoMP"},
      {"load_noncomp_bps", "backhaul rate per BS under Non-CoMP"},
      {"load_comp_bps", "backhaul rate per BS under CoMP"},
      {"load_ms_bps", "backhaul rate per BS under mode selection"},
      {"ms_over_comp", "load_ms / load_comp"},
  };
}

std::vector<Column> fig5_columns() {
  return {
      {"snr_db", "cell-edge SNR in dB"},
      {"distance_m", "center of the distance bin (distance to the serving BS)"},
      {"users", "users in the bin"},
      {"rate_comp", "mean net rate under CoMP, bit/s/Hz"},
      {"rate_noncomp", "mean net rate under Non-CoMP"},
      {"rate_ms", "mean net rate under mode selection with the closed-form rule"},
      {"rate_ms_accurate", "mode selection with T_eta from the mean orthogonality"},
      {"rate_ms_simulated", "mode selection from the simulated mean rates"},
      {"rate_comp_no_ovh", "CoMP rate without training overhead"},
      {"rate_noncomp_no_ovh", "Non-CoMP rate without training overhead"},
      {"comp_share", "fraction of the bin's users selecting CoMP"},
  };
}

std::vector<Column> fig5_users_columns() {
  return {
      {"snr_db", "cell-edge SNR in dB"},
      {"drop", "drop index"},
      {"user", "user index within the drop"},
      {"cell", "serving BS"},
      {"distance_m", "distance to the serving BS"},
      {"boundary_m", "switching distance along the user's bearing (nan: none)"},
      {"mode_proposed", "1 if the closed-form rule selects CoMP"},
      {"mode_accurate", "1 if the rule with mean-orthogonality T_eta selects CoMP"},
      {"mode_simulated", "1 if the simulated mean CoMP rate is larger"},
      {"mode_upper_bound", "1 if the CoMP Jensen bound is larger"},
      {"rate_comp", "mean net rate under CoMP"},
      {"rate_noncomp", "mean net rate under Non-CoMP"},
      {"rate_ms", "mean net rate under mode selection"},
      {"rate_ms_accurate", "mode selection with mean-orthogonality T_eta"},
      {"rate_ms_simulated", "mode selection from the simulated rates"},
      {"rate_comp_no_ovh", "CoMP rate without overhead"},
      {"rate_noncomp_no_ovh", "Non-CoMP rate without overhead"},
      {"mean_sinr_comp", "mean CoMP SINR"},
      {"mean_sinr_noncomp", "mean Non-CoMP SINR"},
  };
}

std::vector<Column> table1_columns() {
  return {
      {"snr_db", "cell-edge SNR in dB"},
      {"switching_distance_m", "switching distance toward the cluster center (nan: none)"},
      {"percent_comp", "percentage of dropped users selecting CoMP"},
      {"term_a_db", "10 log10(1 + a) at the switching distance"},
      {"term_b_db", "10 log10(1 + b) at the switching distance"},
      {"variable_db", "10 log10((1 + a)(1 + b)) at the switching distance"},
  };
}

double mode_flag(Mode m) { return m == Mode::CoMP ? 1.0 : 0.0; }

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double mean_rate(double v, const std::vector<double>& sinr) {
  double s = 0.0;
  for (double g : sinr) s += net_rate(v, g);
  return s / static_cast<double>(sinr.size());
}

}  // namespace

std::vector<Report> report_catalog() {
  const std::pair<const char*, std::vector<Column> (*)()> all[] = {
      {"fig1", fig1_columns}, {"fig2", fig2_columns},   {"fig3", fig3_columns},
      {"fig4", fig4_columns}, {"fig5", fig5_columns},   {"fig5_users", fig5_users_columns},
      {"table1", table1_columns},
  };
  std::vector<Report> out;
  for (const auto& [id, columns] : all) {
    Report r;
    r.id = id;
    r.columns = columns();
    out.push_back(std::move(r));
  }
  return out;
}

ExecPolicy policy_for(const ExperimentConfig& config) {
  ExecPolicy p;
  p.threads = config.threads;
  return p;
}

DropSet make_drops(const ExperimentConfig& config, const NetworkGeometry& geom,
                   const ExecPolicy& policy) {
  struct One {
    UserDrop drop;
    std::vector<LinkGains> gains;
  };
  auto all = map_trials<One>(config.drops, policy, [&](std::size_t d) {
    Stream rng = derive_substream(config.seed, {kDropStream, d});
    One one;
    one.drop = drop_users(geom, config.users_per_cell, config.min_dist, rng);
    one.gains.reserve(one.drop.size());
    for (std::size_t u = 0; u < one.drop.size(); ++u) {
      LinkGains g = link_gains(geom, one.drop.positions[u]);
      g.serving = one.drop.serving_bs[u];
      if (config.shadowing_db > 0.0) apply_shadowing(g, config.shadowing_db, rng);
      one.gains.push_back(std::move(g));
    }
    return one;
  });
  DropSet set;
  set.drops.reserve(all.size());
  set.gains.reserve(all.size());
  for (auto& one : all) {
    set.drops.push_back(std::move(one.drop));
    set.gains.push_back(std::move(one.gains));
  }
  return set;
}

double comp_fraction(const DropSet& drops, const RuleConfig& rule) {
  std::size_t comp = 0;
  std::size_t total = 0;
  for (const auto& users : drops.gains) {
    for (const auto& g : users) {
      if (select_mode(g, rule).mode == Mode::CoMP) ++comp;
      ++total;
    }
  }
  if (total == 0) throw ConfigError("no users dropped");
  return static_cast<double>(comp) / static_cast<double>(total);
}

// ---------------------------------------------------------------- fig1

Fig1Result run_fig1(const ExperimentConfig& config, const ExecPolicy& policy) {
  validate(config);
  const NetworkGeometry geom = make_geometry(config);
  const std::size_t cell = 0;
  const double bearing = bearing_to_cluster_center(geom, cell);
  const double edge = ray_length(geom, cell, bearing);

  OrthogonalityStudy study;
  study.scheduler = SchedulerKind::Sus;
  study.num_bs = config.num_bs;
  study.num_antennas = config.num_antennas;
  study.users_per_bs = config.users_per_bs;
  study.users_per_cell = config.users_per_cell;
  study.geometry = &geom;
  study.min_dist = config.min_dist;
  if (config.sus_threshold > 0.0) study.sus_threshold = config.sus_threshold;
  const std::uint64_t orth_seed = derive_substream(config.seed, {kOrthogonalityStream})();

  Fig1Result result;
  result.sus_orthogonality =
      estimate_orthogonality(study, config.orthogonality_trials, orth_seed, policy);
  const double sim_ratio = result.sus_orthogonality.lambda / result.sus_orthogonality.delta;

  Report report = make_report("fig1", config);
  report.columns = fig1_columns();
  report.notes.push_back("sus_lambda=" + fmt(result.sus_orthogonality.lambda));
  report.notes.push_back("sus_delta=" + fmt(result.sus_orthogonality.delta));

  const double step = config.fig1_step;
  const double start = std::max(config.min_dist, step);
  for (double snr : config.snr_edge_db) {
    const RuleConfig analytic = rule_config(config, snr);
    RuleConfig simulated = analytic;
    simulated.orthogonality_ratio = sim_ratio;

    Fig1Curve curve;
    curve.snr_db = snr;
    for (std::size_t i = 0;; ++i) {
      const double d = start + static_cast<double>(i) * step;
      if (d > edge + 1e-9) break;
      LinkGains g = link_gains(geom, point_on_ray(geom, cell, bearing, d));
      g.serving = cell;
      const auto dv = decision_variable(g, analytic.tx_power, analytic.noise);
      curve.distance.push_back(d);
      curve.variable_db.push_back(linear_to_db(dv.value));
      curve.analytic_threshold_db.push_back(linear_to_db(threshold(g, analytic).value));
      curve.simulated_threshold_db.push_back(linear_to_db(threshold(g, simulated).value));
      report.add_row({snr, d, curve.variable_db.back(), curve.analytic_threshold_db.back(),
                      curve.simulated_threshold_db.back()});
    }
    curve.analytic_crossing = switching_distance(geom, cell, bearing, analytic, config.min_dist);
    curve.simulated_crossing =
        switching_distance(geom, cell, bearing, simulated, config.min_dist);
    report.notes.push_back("crossing_analytic_" + fmt(snr) +
                           "dB=" + crossing_note(curve.analytic_crossing));
    report.notes.push_back("crossing_simulated_" + fmt(snr) +
                           "dB=" + crossing_note(curve.simulated_crossing));
    result.curves.push_back(std::move(curve));
  }
  result.report = std::move(report);
  return result;
}

// ---------------------------------------------------------------- fig2

Fig2Result run_fig2(const ExperimentConfig& config) {
  validate(config);
  const NetworkGeometry geom = make_geometry(config);
  const std::size_t cell = 0;
  const double bearing = bearing_to_cluster_center(geom, cell);

  Fig2Result result;
  Report report = make_report("fig2", config);
  report.columns = fig2_columns();
  for (double snr : config.fig2_snr_db) {
    const RuleConfig base = rule_config(config, snr);
    RuleConfig truth = base;
    truth.users_per_bs = config.users_per_bs;
    const auto d_true = switching_distance(geom, cell, bearing, truth, config.min_dist);
    for (std::size_t m : m_estimates(config)) {
      RuleConfig guess = base;
      guess.users_per_bs = m;
      const auto d_est = switching_distance(geom, cell, bearing, guess, config.min_dist);
      Fig2Point p;
      p.snr_db = snr;
      p.m_est = m;
      p.distance_true = crossing_or_nan(d_true);
      p.distance_est = crossing_or_nan(d_est);
      if (d_true.kind == BoundaryKind::Crossing && d_est.kind == BoundaryKind::Crossing)
        p.error = std::abs(d_est.distance - d_true.distance);
      else
        p.error = d_true.kind == d_est.kind ? 0.0 : kNaN;
      if (std::isnan(p.error))
        result.max_error = kNaN;
      else if (!std::isnan(result.max_error))
        result.max_error = std::max(result.max_error, p.error);
      report.add_row({snr, static_cast<double>(m), p.distance_true, p.distance_est, p.error});
      result.points.push_back(p);
    }
  }
  report.notes.push_back("max_error_m=" + fmt(result.max_error));
  result.report = std::move(report);
  return result;
}

// ---------------------------------------------------------------- fig3

double percent_comp_users(const ExperimentConfig& config, const DropSet& drops, double snr_db,
                          double coherence_uses, double beta) {
  const RuleConfig rule =
      rule_config(config, snr_db, overhead_model(config, coherence_uses, beta));
  return 100.0 * comp_fraction(drops, rule);
}

Fig3Result run_fig3(const ExperimentConfig& config, const ExecPolicy& policy) {
  validate(config);
  const NetworkGeometry geom = make_geometry(config);
  const DropSet drops = make_drops(config, geom, policy);
  const auto grid = coherence_grid(config);

  Fig3Result result;
  Report report = make_report("fig3", config);
  report.columns = fig3_columns();

  struct Setting {
    double beta;
    double uses;
    double snr;
  };
  std::vector<Setting> settings;
  for (double beta : config.betas)
    for (double uses : grid)
      for (double snr : config.snr_edge_db) settings.push_back({beta, uses, snr});

  const auto percents = map_trials<double>(settings.size(), policy, [&](std::size_t i) {
    const auto& s = settings[i];
    return percent_comp_users(config, drops, s.snr, s.uses, s.beta);
  });
  for (std::size_t i = 0; i < settings.size(); ++i) {
    const auto& s = settings[i];
    result.points.push_back({s.uses, s.beta, s.snr, percents[i]});
    report.add_row({s.uses, s.beta, s.snr, percents[i]});
  }
  result.report = std::move(report);
  return result;
}

// ---------------------------------------------------------------- fig4

BackhaulLoads backhaul_loads(const BackhaulModel& model, std::size_t num_bs,
                             std::size_t users_per_bs, double comp_share) {
  if (!(comp_share >= 0.0 && comp_share <= 1.0))
    throw DomainError("CoMP share must lie in [0, 1]");
  if (!(model.bandwidth >= 0.0) || !(model.spectral_rate >= 0.0))
    throw ConfigError("backhaul bandwidth and spectral rate must be nonnegative");
  const double per_bs = static_cast<double>(users_per_bs) * model.spectral_rate * model.bandwidth;
  const double b = static_cast<double>(num_bs);
  BackhaulLoads loads;
  loads.noncomp = per_bs;
  loads.comp = b * per_bs;
  loads.mode_selection = (comp_share * b + 1.0 - comp_share) * per_bs;
  return loads;
}

Fig4Result run_fig4(const ExperimentConfig& config, const ExecPolicy& policy) {
  validate(config);
  const NetworkGeometry geom = make_geometry(config);
  const DropSet drops = make_drops(config, geom, policy);
  const BackhaulModel model{config.backhaul_bandwidth, config.spectral_rate};

  Fig4Result result;
  Report report = make_report("fig4", config);
  report.columns = fig4_columns();
  for (double snr : config.snr_edge_db) {
    Fig4Point p;
    p.snr_db = snr;
    p.comp_share = comp_fraction(drops, rule_config(config, snr));
    p.loads = backhaul_loads(model, config.num_bs, config.users_per_bs, p.comp_share);
    report.add_row({snr, p.comp_share, p.loads.noncomp, p.loads.comp, p.loads.mode_selection,
                    p.loads.mode_selection / p.loads.comp});
    result.points.push_back(p);
  }
  result.report = std::move(report);
  return result;
}

// ---------------------------------------------------------------- fig5

namespace {

struct DropContext {
  const ExperimentConfig& config;
  const NetworkGeometry& geom;
  const LinkParams& params;
  const RuleConfig& rule;
  const RuleConfig& rule_accurate;
  double snr_db;
};

// SINR of every user in every block when the pool is split by `modes`:
// CoMP users pick partners among the other CoMP users of the cluster,
// Non-CoMP users among the Non-CoMP users of their own cell. A uniform
// partition reproduces the pure modes.
std::vector<std::vector<double>> partition_sinr(const DropContext& ctx, std::size_t drop,
                                                std::span<const LinkGains> gains,
                                                const std::vector<Mode>& modes,
                                                std::uint64_t pass) {
  const std::size_t n = gains.size();
  std::vector<std::vector<std::size_t>> comp_pool(n);
  std::vector<std::vector<std::size_t>> nc_pool(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || modes[v] != modes[u]) continue;
      if (modes[u] == Mode::CoMP)
        comp_pool[u].push_back(v);
      else if (gains[v].serving == gains[u].serving)
        nc_pool[u].push_back(v);
    }
  }

  std::vector<std::vector<double>> sinr(n, std::vector<double>(ctx.config.fading_blocks));
  for (std::size_t blk = 0; blk < ctx.config.fading_blocks; ++blk) {
    Stream fading = derive_substream(ctx.config.seed, {kFadingStream, drop, blk});
    const BlockChannels block = draw_block(gains, ctx.params.num_antennas, fading);
    Stream sched = derive_substream(ctx.config.seed, {kSchedulerStream, drop, blk, pass});
    InterferenceField field;
    const InterferenceField* fp = nullptr;
    if (ctx.params.ici == IciModel::Instantaneous) {
      field = build_interference(block, gains, ctx.params, sched);
      fp = &field;
    }
    for (std::size_t u = 0; u < n; ++u) {
      sinr[u][blk] = modes[u] == Mode::CoMP
                         ? comp_sinr(u, comp_pool[u], block, ctx.params, sched)
                         : noncomp_sinr(u, nc_pool[u], block, gains, ctx.params, sched, fp);
    }
  }
  return sinr;
}

std::vector<double> partition_rates(const DropContext& ctx, std::size_t drop,
                                    std::span<const LinkGains> gains,
                                    const std::vector<Mode>& modes, std::uint64_t pass,
                                    std::vector<double>& jensen_slack) {
  const auto sinr = partition_sinr(ctx, drop, gains, modes, pass);
  std::vector<double> rates(gains.size());
  for (std::size_t u = 0; u < gains.size(); ++u) {
    const double v = modes[u] == Mode::CoMP ? ctx.rule.overhead_comp : ctx.rule.overhead_noncomp;
    rates[u] = mean_rate(v, sinr[u]);
    jensen_slack[u] = std::max(jensen_slack[u], rates[u] - jensen_bound(v, mean_of(sinr[u])));
  }
  return rates;
}

struct DropOutcome {
  std::vector<UserOutcome> users;
  std::size_t violations = 0;
};

bool violates(double slack, double bound) { return slack > 1e-12 * std::max(1.0, bound); }

DropOutcome simulate_drop(const DropContext& ctx, std::size_t d, const UserDrop& drop,
                          std::span<const LinkGains> gains) {
  const std::size_t n = gains.size();
  DropOutcome out;
  out.users.resize(n);

  const auto comp = partition_sinr(ctx, d, gains, std::vector<Mode>(n, Mode::CoMP), 0);
  const auto nc = partition_sinr(ctx, d, gains, std::vector<Mode>(n, Mode::NonCoMP), 1);

  std::vector<Mode> proposed(n), accurate(n), simulated(n);
  for (std::size_t u = 0; u < n; ++u) {
    UserOutcome& o = out.users[u];
    const LinkGains& g = gains[u];
    const Point bs = ctx.geom.bs_positions[g.serving];
    const Point p = drop.positions[u];
    o.drop = d;
    o.user = u;
    o.cell = g.serving;
    o.distance = distance(bs, p);
    o.boundary = switching_distance(ctx.geom, g.serving, std::atan2(p.y - bs.y, p.x - bs.x),
                                    ctx.rule, ctx.config.min_dist);
    o.proposed = proposed[u] = select_mode(g, ctx.rule).mode;
    o.accurate = accurate[u] = select_mode(g, ctx.rule_accurate).mode;
    o.simulated = simulated[u] = select_mode_from_samples(
        ReferenceKind::SimulatedRate, ctx.rule.overhead_comp, ctx.rule.overhead_noncomp, comp[u],
        nc[u]);
    o.upper_bound = select_mode_from_samples(ReferenceKind::UpperBound, ctx.rule.overhead_comp,
                                             ctx.rule.overhead_noncomp, comp[u], nc[u]);
    o.mean_sinr_comp = mean_of(comp[u]);
    o.mean_sinr_nc = mean_of(nc[u]);
    o.rate_comp = mean_rate(ctx.rule.overhead_comp, comp[u]);
    o.rate_nc = mean_rate(ctx.rule.overhead_noncomp, nc[u]);
    o.rate_comp_no_ovh = mean_rate(0.0, comp[u]);
    o.rate_nc_no_ovh = mean_rate(0.0, nc[u]);
    o.jensen_slack = std::max({o.rate_comp - jensen_bound(ctx.rule.overhead_comp, o.mean_sinr_comp),
                               o.rate_nc - jensen_bound(ctx.rule.overhead_noncomp, o.mean_sinr_nc),
                               o.rate_comp_no_ovh - jensen_bound(0.0, o.mean_sinr_comp),
                               o.rate_nc_no_ovh - jensen_bound(0.0, o.mean_sinr_nc)});
  }

  // Mode-selection passes; identical partitions share one simulation.
  std::vector<double> slack(n, -std::numeric_limits<double>::infinity());
  std::map<std::vector<Mode>, std::vector<double>> cache;
  std::uint64_t pass = 2;
  auto rates_for = [&](const std::vector<Mode>& modes) -> const std::vector<double>& {
    auto it = cache.find(modes);
    if (it == cache.end()) {
      auto rates = partition_rates(ctx, d, gains, modes, pass++, slack);
      it = cache.emplace(modes, std::move(rates)).first;
    }
    return it->second;
  };
  const auto& ms = rates_for(proposed);
  const auto& ms_acc = rates_for(accurate);
  const auto& ms_sim = rates_for(simulated);
  for (std::size_t u = 0; u < n; ++u) {
    UserOutcome& o = out.users[u];
    o.rate_ms = ms[u];
    o.rate_ms_accurate = ms_acc[u];
    o.rate_ms_simulated = ms_sim[u];
    o.jensen_slack = std::max(o.jensen_slack, slack[u]);
    if (violates(o.jensen_slack, std::max(o.rate_comp_no_ovh, o.rate_nc_no_ovh)))
      ++out.violations;
  }
  return out;
}

}  // namespace

Fig5Run simulate_fig5(const ExperimentConfig& config, double snr_db, const ExecPolicy& policy) {
  validate(config);
  if (config.fading_blocks < 1) throw ConfigError("fading_blocks must be at least 1");
  const NetworkGeometry geom = make_geometry(config);
  const DropSet drops = make_drops(config, geom, policy);
  const LinkParams params = link_params(config, snr_db);
  const RuleConfig rule = rule_config(config, snr_db);
  RuleConfig rule_accurate = rule;
  rule_accurate.eta_mode = EtaMode::Accurate;
  const DropContext ctx{config, geom, params, rule, rule_accurate, snr_db};

  auto outcomes = map_trials<DropOutcome>(config.drops, policy, [&](std::size_t d) {
    return simulate_drop(ctx, d, drops.drops[d], drops.gains[d]);
  });
  Fig5Run run;
  run.snr_db = snr_db;
  for (auto& o : outcomes) {
    run.jensen_violations += o.violations;
    for (auto& u : o.users) run.users.push_back(std::move(u));
  }
  return run;
}

Fig5Result run_fig5(const ExperimentConfig& config, const ExecPolicy& policy) {
  Fig5Result result;
  Report binned = make_report("fig5", config);
  binned.columns = fig5_columns();
  Report users = make_report("fig5_users", config);
  users.columns = fig5_users_columns();

  for (double snr : config.fig5_snr_db) {
    Fig5Run run = simulate_fig5(config, snr, policy);
    binned.notes.push_back("jensen_violations_" + fmt(snr) +
                           "dB=" + std::to_string(run.jensen_violations));

    struct Bin {
      std::size_t n = 0;
      double sums[8] = {};
      std::size_t comp = 0;
    };
    std::map<long, Bin> bins;
    for (const auto& u : run.users) {
      Bin& b = bins[static_cast<long>(std::floor(u.distance / config.distance_bin))];
      ++b.n;
      const double vals[8] = {u.rate_comp,        u.rate_nc,           u.rate_ms,
                              u.rate_ms_accurate, u.rate_ms_simulated, u.rate_comp_no_ovh,
                              u.rate_nc_no_ovh,   0.0};
      for (int k = 0; k < 7; ++k) b.sums[k] += vals[k];
      if (u.proposed == Mode::CoMP) ++b.comp;
      users.add_row({snr, static_cast<double>(u.drop), static_cast<double>(u.user),
                     static_cast<double>(u.cell), u.distance, crossing_or_nan(u.boundary),
                     mode_flag(u.proposed), mode_flag(u.accurate), mode_flag(u.simulated),
                     mode_flag(u.upper_bound), u.rate_comp, u.rate_nc, u.rate_ms,
                     u.rate_ms_accurate, u.rate_ms_simulated, u.rate_comp_no_ovh,
                     u.rate_nc_no_ovh, u.mean_sinr_comp, u.mean_sinr_nc});
    }
    for (const auto& [idx, b] : bins) {
      const double n = static_cast<double>(b.n);
      std::vector<double> row{snr, (static_cast<double>(idx) + 0.5) * config.distance_bin, n};
      for (int k = 0; k < 7; ++k) row.push_back(b.sums[k] / n);
      row.push_back(static_cast<double>(b.comp) / n);
      binned.add_row(std::move(row));
    }
    result.runs.push_back(std::move(run));
  }
  result.binned = std::move(binned);
  result.users = std::move(users);
  return result;
}

// ---------------------------------------------------------------- table1

Table1Result run_table1(const ExperimentConfig& config, const ExecPolicy& policy) {
  validate(config);
  const NetworkGeometry geom = make_geometry(config);
  const DropSet drops = make_drops(config, geom, policy);
  const std::size_t cell = 0;
  const double bearing = bearing_to_cluster_center(geom, cell);

  Table1Result result;
  Report report = make_report("table1", config);
  report.columns = table1_columns();
  for (double snr : config.snr_edge_db) {
    const RuleConfig rule = rule_config(config, snr);
    Table1Row row;
    row.snr_db = snr;
    row.switching = switching_distance(geom, cell, bearing, rule, config.min_dist);
    row.percent_comp = 100.0 * comp_fraction(drops, rule);
    row.term_a_db = row.term_b_db = row.variable_db = kNaN;
    if (row.switching.kind == BoundaryKind::Crossing) {
      LinkGains g = link_gains(geom, point_on_ray(geom, cell, bearing, row.switching.distance));
      g.serving = cell;
      const auto dv = decision_variable(g, rule.tx_power, rule.noise);
      row.term_a_db = linear_to_db(1.0 + dv.term_a);
      row.term_b_db = linear_to_db(1.0 + dv.term_b);
      row.variable_db = linear_to_db(dv.value);
    } else {
      report.notes.push_back("boundary_" + fmt(snr) + "dB=" + crossing_note(row.switching));
    }
    report.add_row({snr, crossing_or_nan(row.switching), row.percent_comp, row.term_a_db,
                    row.term_b_db, row.variable_db});
    result.rows.push_back(row);
  }
  result.report = std::move(report);
  return result;
}

}  // namespace compsel
