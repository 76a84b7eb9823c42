// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compsel/geometry.hpp"
#include "compsel/link_sim.hpp"
#include "compsel/mode.hpp"
#include "compsel/mode_select.hpp"
#include "compsel/throughput.hpp"

namespace compsel {

/// Experiment settings. Config-file keys are the field names.
struct ExperimentConfig {
  // layout
  std::size_t num_bs = 3;
  double cell_radius = 250.0;
  double pathloss_exponent = 3.76;
  double reference_gain = 1.0;
  double site_spacing = 1.7320508075688772;
  std::size_t users_per_cell = 10;
  double min_dist = 1.0;
  double shadowing_db = 0.0;

  // radio
  std::size_t num_antennas = 4;
  std::size_t users_per_bs = 2;
  double tx_power = 1.0;
  std::vector<double> snr_edge_db{10.0, 5.0, 0.0};

  // training overhead; coherence_time * coherence_bandwidth replaces
  // coherence_uses when both are positive
  double coherence_uses = 500.0;
  double coherence_time = 0.0;
  double coherence_bandwidth = 0.0;
  double common_pilot_uses = 9.69;
  double dedicated_pilot_uses = 24.2;
  double beta = 1.0;
  double epsilon = 1.0;
  double streams_per_user = 1.0;

  // scheduling and decision rule
  SchedulerKind scheduler = SchedulerKind::Sus;
  double sus_threshold = 0.4;  ///< 0 disables the semi-orthogonality filter
  EtaMode eta_mode = EtaMode::Approximate;
  IciModel ici_model = IciModel::Expectation;

  // Monte Carlo sizes
  std::size_t drops = 1000;
  std::size_t fading_blocks = 100;
  std::size_t orthogonality_trials = 10000;
  std::uint64_t seed = 1;
  int threads = 0;

  // sweeps
  std::vector<double> coherence_grid{};  ///< empty: log-spaced over [234, 35899]
  std::vector<double> betas{1.0, 0.75};
  std::vector<std::size_t> m_estimates{};  ///< empty: {1, N_t / 2}
  std::vector<double> fig2_snr_db{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> fig5_snr_db{5.0, 0.0};
  double fig1_step = 1.0;
  double distance_bin = 10.0;

  // backhaul
  double backhaul_bandwidth = 20e6;
  double spectral_rate = 2.8;
};

/// Parses a flat `key = value` file; `#` starts a comment, lists are comma
/// separated. Unknown keys and malformed values throw ConfigError.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

/// Sets one field from its textual value.
void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Field name / value pairs in declaration order, formatted as the parser reads them.
/// `threads` is omitted so reports do not depend on the execution setting.
std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& config);

/// Range and consistency checks; throws ConfigError.
void validate(const ExperimentConfig& config);

OverheadModel overhead_model(const ExperimentConfig& config);
OverheadModel overhead_model(const ExperimentConfig& config, double coherence_uses, double beta);
NetworkGeometry make_geometry(const ExperimentConfig& config);
double noise_for(const ExperimentConfig& config, double snr_db);
RuleConfig rule_config(const ExperimentConfig& config, double snr_db);
RuleConfig rule_config(const ExperimentConfig& config, double snr_db, const OverheadModel& model);
LinkParams link_params(const ExperimentConfig& config, double snr_db);
std::vector<double> coherence_grid(const ExperimentConfig& config);
std::vector<std::size_t> m_estimates(const ExperimentConfig& config);

}  // namespace compsel
