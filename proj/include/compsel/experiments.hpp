// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "compsel/config.hpp"
#include "compsel/mode_select.hpp"
#include "compsel/parallel.hpp"
#include "compsel/report.hpp"
#include "compsel/scheduling.hpp"

namespace compsel {

/// Sub-stream tags under the master seed.
enum StreamTag : std::uint64_t {
  kDropStream = 1,
  kFadingStream = 2,
  kSchedulerStream = 3,
  kOrthogonalityStream = 4,
};

/// Users of every drop with their large-scale gains. Drop d depends only on
/// (seed, d), so every experiment sees the same user positions.
struct DropSet {
  std::vector<UserDrop> drops;
  std::vector<std::vector<LinkGains>> gains;
};

DropSet make_drops(const ExperimentConfig& config, const NetworkGeometry& geom,
                   const ExecPolicy& policy);

/// Fraction of users in `drops` for which the closed-form rule picks CoMP.
double comp_fraction(const DropSet& drops, const RuleConfig& rule);

// ---------------------------------------------------------------- fig1

struct Fig1Curve {
  double snr_db = 0.0;
  std::vector<double> distance;
  std::vector<double> variable_db;
  std::vector<double> analytic_threshold_db;
  std::vector<double> simulated_threshold_db;
  SwitchingResult analytic_crossing;
  SwitchingResult simulated_crossing;
};

struct Fig1Result {
  OrthogonalityEstimate sus_orthogonality;  ///< SUS means feeding the simulated threshold
  std::vector<Fig1Curve> curves;
  Report report;
};

/// Decision variable and both thresholds along the ray from BS 0 toward the
/// cluster center, for every configured cell-edge SNR.
Fig1Result run_fig1(const ExperimentConfig& config, const ExecPolicy& policy = {});

// ---------------------------------------------------------------- fig2

struct Fig2Point {
  double snr_db = 0.0;
  std::size_t m_est = 1;
  double distance_true = 0.0;
  double distance_est = 0.0;
  double error = 0.0;
};

struct Fig2Result {
  std::vector<Fig2Point> points;
  double max_error = 0.0;
  Report report;
};

Fig2Result run_fig2(const ExperimentConfig& config);

// ---------------------------------------------------------------- fig3

struct Fig3Point {
  double coherence_uses = 0.0;
  double beta = 1.0;
  double snr_db = 0.0;
  double percent_comp = 0.0;
};

struct Fig3Result {
  std::vector<Fig3Point> points;
  Report report;
};

Fig3Result run_fig3(const ExperimentConfig& config, const ExecPolicy& policy = {});

/// CoMP-user percentage at one (SNR, C, beta) setting over the configured drops.
double percent_comp_users(const ExperimentConfig& config, const DropSet& drops, double snr_db,
                          double coherence_uses, double beta);

// ---------------------------------------------------------------- fig4

struct BackhaulModel {
  double bandwidth = 20e6;   ///< W in Hz
  double spectral_rate = 2.8;  ///< C_s in bit/s/Hz per user
};

/// Average data rate from the central unit to each BS, in bit/s.
struct BackhaulLoads {
  double noncomp = 0.0;
  double comp = 0.0;
  double mode_selection = 0.0;
};

/// NC: M C_s W; CoMP: B M C_s W; MS: (p_c B + 1 - p_c) M C_s W.
BackhaulLoads backhaul_loads(const BackhaulModel& model, std::size_t num_bs,
                             std::size_t users_per_bs, double comp_share);

struct Fig4Point {
  double snr_db = 0.0;
  double comp_share = 0.0;
  BackhaulLoads loads;
};

struct Fig4Result {
  std::vector<Fig4Point> points;
  Report report;
};

Fig4Result run_fig4(const ExperimentConfig& config, const ExecPolicy& policy = {});

// ---------------------------------------------------------------- fig5

struct UserOutcome {
  std::size_t drop = 0;
  std::size_t user = 0;
  std::size_t cell = 0;
  double distance = 0.0;
  /// Switching boundary along the user's own bearing from its BS.
  SwitchingResult boundary;
  Mode proposed = Mode::NonCoMP;
  Mode accurate = Mode::NonCoMP;
  Mode simulated = Mode::NonCoMP;
  Mode upper_bound = Mode::NonCoMP;
  double rate_comp = 0.0;
  double rate_nc = 0.0;
  double rate_ms = 0.0;
  double rate_ms_accurate = 0.0;
  double rate_ms_simulated = 0.0;
  double rate_comp_no_ovh = 0.0;
  double rate_nc_no_ovh = 0.0;
  double mean_sinr_comp = 0.0;
  double mean_sinr_nc = 0.0;
  /// Mean net rate minus its Jensen bound, worst over the user's batches.
  double jensen_slack = 0.0;
};

struct Fig5Run {
  double snr_db = 0.0;
  std::vector<UserOutcome> users;
  std::size_t jensen_violations = 0;
};

struct Fig5Result {
  std::vector<Fig5Run> runs;
  Report binned;
  Report users;
};

/// Per-user average net rates under CoMP, Non-CoMP and mode selection. Every
/// user is evaluated in every fading block with partners chosen by the
/// configured scheduler from the pool allowed by the mode (whole cluster for
/// CoMP, own cell for Non-CoMP, own mode group under mode selection).
Fig5Result run_fig5(const ExperimentConfig& config, const ExecPolicy& policy = {});

Fig5Run simulate_fig5(const ExperimentConfig& config, double snr_db, const ExecPolicy& policy = {});

// ---------------------------------------------------------------- table1

struct Table1Row {
  double snr_db = 0.0;
  SwitchingResult switching;
  double percent_comp = 0.0;
  double term_a_db = 0.0;
  double term_b_db = 0.0;
  double variable_db = 0.0;
};

struct Table1Result {
  std::vector<Table1Row> rows;
  Report report;
};

Table1Result run_table1(const ExperimentConfig& config, const ExecPolicy& policy = {});

ExecPolicy policy_for(const ExperimentConfig& config);

/// Column layout of every report the experiments write, without rows.
std::vector<Report> report_catalog();

}  // namespace compsel
