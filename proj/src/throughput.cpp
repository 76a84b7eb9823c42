// SPDX-License-Identifier: Apache-2.0
#include "compsel/throughput.hpp"

#include <cmath>

#include "compsel/errors.hpp"

namespace compsel {

double overhead(const OverheadModel& model, Mode mode, std::size_t num_bs,
                std::size_t num_antennas) {
  if (!(model.coherence_uses > 0.0)) throw ConfigError("coherence block must be positive");
  if (model.common_pilot_uses < 0.0 || model.dedicated_pilot_uses < 0.0 ||
      model.streams_per_user < 0.0)
    throw ConfigError("pilot counts must be non-negative");
  if (model.beta < 0.0 || model.beta > 1.0) throw ConfigError("beta must lie in [0, 1]");
  if (model.epsilon < 1.0) throw ConfigError("epsilon must be at least 1");

  const double nt = static_cast<double>(num_antennas);
  const double dedicated = model.streams_per_user * model.dedicated_pilot_uses;
  const double used =
      mode == Mode::NonCoMP
          ? nt * model.common_pilot_uses + dedicated
          : model.beta * static_cast<double>(num_bs) * nt * model.common_pilot_uses +
                model.epsilon * dedicated;
  const double v = used / model.coherence_uses;
  if (v >= 1.0) throw InfeasibleOverheadError("pilots consume the whole coherence block");
  return v;
}

double net_rate(double overhead_fraction, double sinr) {
  return (1.0 - overhead_fraction) * std::log2(1.0 + sinr);
}

double jensen_bound(double overhead_fraction, double mean_sinr) {
  return net_rate(overhead_fraction, mean_sinr);
}

double eta(double overhead_fraction, double mean_sinr) {
  if (mean_sinr <= 0.0) return 1.0 - overhead_fraction;
  return std::expm1((1.0 - overhead_fraction) * std::log1p(mean_sinr)) / mean_sinr;
}

double mean_sinr_approx(Mode mode, const LinkGains& gains, double tx_power, double noise,
                        std::size_t num_antennas, std::size_t users_per_bs,
                        double expected_orth) {
  const double scale = tx_power * static_cast<double>(num_antennas) * expected_orth /
                       static_cast<double>(users_per_bs);
  if (mode == Mode::CoMP) return scale * gains.total() / noise;
  return scale * gains.serving_gain() / (tx_power * gains.interference_sum() + noise);
}

}  // namespace compsel
