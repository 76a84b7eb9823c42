// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "compsel/geometry.hpp"
#include "compsel/mode.hpp"

namespace compsel {

/// Downlink pilot accounting over one coherence block.
struct OverheadModel {
  double coherence_uses = 500.0;     ///< C = T_c W_c channel uses per block
  double common_pilot_uses = 9.69;   ///< C_c, per transmit antenna
  double dedicated_pilot_uses = 24.2;  ///< C_d, per data stream
  double beta = 1.0;                 ///< common-pilot sparsity under CoMP, <= 1
  double epsilon = 1.0;              ///< dedicated-pilot expansion under CoMP, >= 1
  double streams_per_user = 1.0;     ///< N_r
};

/// v^NC = (N_t C_c + N_r C_d) / C and v^C = (beta B N_t C_c + epsilon N_r C_d) / C.
/// Throws InfeasibleOverheadError when the pilots fill the whole block.
double overhead(const OverheadModel& model, Mode mode, std::size_t num_bs,
                std::size_t num_antennas);

/// (1 - v) log2(1 + sinr)
double net_rate(double overhead_fraction, double sinr);

/// Jensen upper bound on the mean net rate: (1 - v) log2(1 + mean sinr).
double jensen_bound(double overhead_fraction, double mean_sinr);

/// ((mean_sinr + 1)^(1 - v) - 1) / mean_sinr, so that
/// log2(1 + eta * mean_sinr) == (1 - v) log2(1 + mean_sinr).
/// The mean_sinr -> 0 limit is 1 - v.
double eta(double overhead_fraction, double mean_sinr);

/// Closed-form mean SINR with the orthogonality factor replaced by its mean
/// `expected_orth`. CoMP: P N_t (sum_i alpha_i^2) E / (M sigma^2). Non-CoMP:
/// P N_t alpha_b^2 E / (M (P sum_{i != b} alpha_i^2 + sigma^2)).
double mean_sinr_approx(Mode mode, const LinkGains& gains, double tx_power, double noise,
                        std::size_t num_antennas, std::size_t users_per_bs,
                        double expected_orth = 1.0);

}  // namespace compsel
