// SPDX-License-Identifier: Apache-2.0
#include "compsel/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "compsel/errors.hpp"

namespace compsel {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key));
}

double to_double(std::string_view key, std::string_view v) {
  v = trim(v);
  const std::string s(v);
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(d)) bad_value(key, v);
  return d;
}

std::uint64_t to_u64(std::string_view key, std::string_view v) {
  v = trim(v);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v);
  return out;
}

std::vector<std::string_view> split_list(std::string_view v) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = v.find(',');
    const auto part = trim(v.substr(0, comma));
    if (!part.empty()) parts.push_back(part);
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return parts;
}

std::string fmt(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", d);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt(v[i]);
  return out;
}

std::string fmt_list(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

static_assert(std::is_same_v<std::size_t, std::uint64_t>,
              "seed is parsed through the size_t path");

// Binds one field to its name for both parsing and echoing.
template <class Visitor>
void visit_fields(ExperimentConfig& c, Visitor&& v) {
  v("num_bs", c.num_bs);
  v("cell_radius", c.cell_radius);
  v("pathloss_exponent", c.pathloss_exponent);
  v("reference_gain", c.reference_gain);
  v("site_spacing", c.site_spacing);
  v("users_per_cell", c.users_per_cell);
  v("min_dist", c.min_dist);
  v("shadowing_db", c.shadowing_db);
  v("num_antennas", c.num_antennas);
  v("users_per_bs", c.users_per_bs);
  v("tx_power", c.tx_power);
  v("snr_edge_db", c.snr_edge_db);
  v("coherence_uses", c.coherence_uses);
  v("coherence_time", c.coherence_time);
  v("coherence_bandwidth", c.coherence_bandwidth);
  v("common_pilot_uses", c.common_pilot_uses);
  v("dedicated_pilot_uses", c.dedicated_pilot_uses);
  v("beta", c.beta);
  v("epsilon", c.epsilon);
  v("streams_per_user", c.streams_per_user);
  v("scheduler", c.scheduler);
  v("sus_threshold", c.sus_threshold);
  v("eta_mode", c.eta_mode);
  v("ici_model", c.ici_model);
  v("drops", c.drops);
  v("fading_blocks", c.fading_blocks);
  v("orthogonality_trials", c.orthogonality_trials);
  v("seed", c.seed);
  v("threads", c.threads);
  v("coherence_grid", c.coherence_grid);
  v("betas", c.betas);
  v("m_estimates", c.m_estimates);
  v("fig2_snr_db", c.fig2_snr_db);
  v("fig5_snr_db", c.fig5_snr_db);
  v("fig1_step", c.fig1_step);
  v("distance_bin", c.distance_bin);
  v("backhaul_bandwidth", c.backhaul_bandwidth);
  v("spectral_rate", c.spectral_rate);
}

struct Setter {
  std::string_view key;
  std::string_view value;
  bool found = false;

  void assign(std::string_view k, double& f) { f = to_double(k, value); }
  void assign(std::string_view k, std::size_t& f) { f = static_cast<std::size_t>(to_u64(k, value)); }
  void assign(std::string_view k, int& f) { f = static_cast<int>(to_u64(k, value)); }
  void assign(std::string_view k, std::vector<double>& f) {
    f.clear();
    for (auto p : split_list(value)) f.push_back(to_double(k, p));
  }
  void assign(std::string_view k, std::vector<std::size_t>& f) {
    f.clear();
    for (auto p : split_list(value)) f.push_back(static_cast<std::size_t>(to_u64(k, p)));
  }
  void assign(std::string_view k, SchedulerKind& f) {
    const auto v = trim(value);
    if (v == "sus") f = SchedulerKind::Sus;
    else if (v == "random") f = SchedulerKind::Random;
    else bad_value(k, v);
  }
  void assign(std::string_view k, EtaMode& f) {
    const auto v = trim(value);
    if (v == "approximate") f = EtaMode::Approximate;
    else if (v == "accurate") f = EtaMode::Accurate;
    else bad_value(k, v);
  }
  void assign(std::string_view k, IciModel& f) {
    const auto v = trim(value);
    if (v == "expectation") f = IciModel::Expectation;
    else if (v == "instantaneous") f = IciModel::Instantaneous;
    else bad_value(k, v);
  }

  template <class T>
  void operator()(std::string_view k, T& field) {
    if (k != key) return;
    found = true;
    assign(k, field);
  }
};

struct Describer {
  std::vector<std::pair<std::string, std::string>> out;

  static std::string text(double v) { return fmt(v); }
  static std::string text(std::size_t v) { return std::to_string(v); }
  static std::string text(int v) { return std::to_string(v); }
  static std::string text(const std::vector<double>& v) { return fmt_list(v); }
  static std::string text(const std::vector<std::size_t>& v) { return fmt_list(v); }
  static std::string text(SchedulerKind v) { return std::string(to_string(v)); }
  static std::string text(EtaMode v) {
    return v == EtaMode::Accurate ? "accurate" : "approximate";
  }
  static std::string text(IciModel v) {
    return v == IciModel::Instantaneous ? "instantaneous" : "expectation";
  }

  template <class T>
  void operator()(std::string_view k, T& field) {
    // Thread count changes the schedule of work, never the numbers.
    if (k == "threads") return;
    out.emplace_back(std::string(k), text(field));
  }
};

}  // namespace

void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value) {
  Setter setter{trim(key), value};
  visit_fields(config, setter);
  if (!setter.found) throw ConfigError("unknown config key '" + std::string(key) + "'");
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    set_config_value(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& config) {
  Describer d;
  ExperimentConfig copy = config;
  visit_fields(copy, d);
  return d.out;
}

void validate(const ExperimentConfig& c) {
  if (c.num_bs != 1 && c.num_bs != 3) throw ConfigError("num_bs must be 1 or 3");
  if (!(c.cell_radius > 0.0)) throw ConfigError("cell_radius must be positive");
  if (!(c.pathloss_exponent > 2.0)) throw ConfigError("pathloss_exponent must exceed 2");
  if (c.users_per_cell < 1) throw ConfigError("users_per_cell must be at least 1");
  if (!(c.min_dist >= 0.0 && c.min_dist < c.cell_radius))
    throw ConfigError("min_dist must lie in [0, cell_radius)");
  if (c.num_antennas < 1) throw ConfigError("num_antennas must be at least 1");
  if (c.users_per_bs < 1 || c.users_per_bs > c.num_antennas)
    throw ConfigError("users_per_bs must lie in [1, num_antennas]");
  if (c.users_per_bs > c.users_per_cell)
    throw ConfigError("users_per_bs cannot exceed users_per_cell");
  if (!(c.tx_power > 0.0)) throw ConfigError("tx_power must be positive");
  if (c.snr_edge_db.empty()) throw ConfigError("snr_edge_db must list at least one value");
  if (c.drops < 1 || c.fading_blocks < 1 || c.orthogonality_trials < 1)
    throw ConfigError("trial counts must be positive");
  if (!(c.fig1_step > 0.0) || !(c.distance_bin > 0.0))
    throw ConfigError("fig1_step and distance_bin must be positive");
  if (c.sus_threshold < 0.0 || c.sus_threshold > 1.0)
    throw ConfigError("sus_threshold must lie in [0, 1]");
  for (std::size_t m : m_estimates(c))
    if (m < 1 || m > c.num_antennas) throw ConfigError("m_estimates must lie in [1, num_antennas]");
  // Throws InfeasibleOverheadError / ConfigError on a bad pilot setup.
  (void)overhead(overhead_model(c), Mode::CoMP, c.num_bs, c.num_antennas);
  (void)make_geometry(c);
}

OverheadModel overhead_model(const ExperimentConfig& c) {
  const double uses = c.coherence_time > 0.0 && c.coherence_bandwidth > 0.0
                          ? c.coherence_time * c.coherence_bandwidth
                          : c.coherence_uses;
  return overhead_model(c, uses, c.beta);
}

OverheadModel overhead_model(const ExperimentConfig& c, double coherence_uses, double beta) {
  OverheadModel m;
  m.coherence_uses = coherence_uses;
  m.common_pilot_uses = c.common_pilot_uses;
  m.dedicated_pilot_uses = c.dedicated_pilot_uses;
  m.beta = beta;
  m.epsilon = c.epsilon;
  m.streams_per_user = c.streams_per_user;
  return m;
}

NetworkGeometry make_geometry(const ExperimentConfig& c) {
  ClusterOptions opts;
  opts.pathloss_exponent = c.pathloss_exponent;
  opts.reference_gain = c.reference_gain;
  opts.site_spacing = c.site_spacing;
  return build_cluster(c.num_bs, c.cell_radius, opts);
}

double noise_for(const ExperimentConfig& c, double snr_db) {
  return noise_power(c.tx_power, c.reference_gain, snr_db);
}

RuleConfig rule_config(const ExperimentConfig& c, double snr_db) {
  return rule_config(c, snr_db, overhead_model(c));
}

RuleConfig rule_config(const ExperimentConfig& c, double snr_db, const OverheadModel& model) {
  RuleConfig r;
  r.tx_power = c.tx_power;
  r.noise = noise_for(c, snr_db);
  r.num_bs = c.num_bs;
  r.num_antennas = c.num_antennas;
  r.users_per_bs = c.users_per_bs;
  r.overhead_comp = overhead(model, Mode::CoMP, c.num_bs, c.num_antennas);
  r.overhead_noncomp = overhead(model, Mode::NonCoMP, c.num_bs, c.num_antennas);
  r.scheduler = c.scheduler;
  if (c.sus_threshold > 0.0) r.sus_threshold = c.sus_threshold;
  r.eta_mode = c.eta_mode;
  return r;
}

LinkParams link_params(const ExperimentConfig& c, double snr_db) {
  LinkParams p;
  p.tx_power = c.tx_power;
  p.noise = noise_for(c, snr_db);
  p.num_bs = c.num_bs;
  p.num_antennas = c.num_antennas;
  p.users_per_bs = c.users_per_bs;
  p.scheduler = c.scheduler;
  if (c.sus_threshold > 0.0) p.sus_threshold = c.sus_threshold;
  p.ici = c.ici_model;
  return p;
}

std::vector<double> coherence_grid(const ExperimentConfig& c) {
  if (!c.coherence_grid.empty()) return c.coherence_grid;
  constexpr double lo = 234.0;
  constexpr double hi = 35899.0;
  constexpr int points = 13;
  std::vector<double> grid;
  for (int i = 0; i < points; ++i)
    grid.push_back(std::round(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1))));
  return grid;
}

std::vector<std::size_t> m_estimates(const ExperimentConfig& c) {
  if (!c.m_estimates.empty()) return c.m_estimates;
  return {1, std::max<std::size_t>(1, c.num_antennas / 2)};
}

}  // namespace compsel
