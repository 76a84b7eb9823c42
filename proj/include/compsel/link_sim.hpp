// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "compsel/fading.hpp"
#include "compsel/geometry.hpp"
#include "compsel/mode.hpp"
#include "compsel/rng.hpp"

namespace compsel {

enum class IciModel {
  Expectation,    ///< ICI power replaced by its mean P alpha_i^2
  Instantaneous,  ///< ICI from the other BSs' actual ZF precoders in the block
};

struct LinkParams {
  double tx_power = 1.0;
  double noise = 0.1;
  std::size_t num_bs = 3;
  std::size_t num_antennas = 4;
  std::size_t users_per_bs = 2;
  SchedulerKind scheduler = SchedulerKind::Sus;
  std::optional<double> sus_threshold;
  IciModel ici = IciModel::Expectation;
};

/// One block-fading realization for a set of users.
struct BlockChannels {
  std::vector<std::vector<CVector>> small;  ///< [user][bs] small-scale g_iu
  std::vector<CVector> global;              ///< stacked alpha_iu g_iu
  std::vector<CVector> local;               ///< alpha_bu g_bu seen by the serving BS
};

BlockChannels draw_block(std::span<const LinkGains> gains, std::size_t num_antennas,
                         Stream& rng);

/// Per-BS transmit matrices (power included) used for instantaneous ICI.
struct InterferenceField {
  std::vector<CMatrix> precoders;
};

/// Each BS schedules its own users with the configured scheduler and precodes
/// them with ZF; the result feeds noncomp_sinr under IciModel::Instantaneous.
InterferenceField build_interference(const BlockChannels& block, std::span<const LinkGains> gains,
                                     const LinkParams& params, Stream& rng);

/// Partners for `user` out of `candidates`: SUS with the user as first pick, or
/// a uniform draw. At most `group_size - 1` partners are returned.
std::vector<std::size_t> pick_partners(std::size_t user, std::span<const std::size_t> candidates,
                                       std::span<const CVector> channels, std::size_t group_size,
                                       const LinkParams& params, Stream& rng);

/// SINR of `user` under joint ZF with partners picked from `candidates`.
double comp_sinr(std::size_t user, std::span<const std::size_t> candidates,
                 const BlockChannels& block, const LinkParams& params, Stream& rng);

/// SINR of `user` under single-cell ZF at its serving BS with partners picked
/// from `candidates` (expected to be users of the same cell).
double noncomp_sinr(std::size_t user, std::span<const std::size_t> candidates,
                    const BlockChannels& block, std::span<const LinkGains> gains,
                    const LinkParams& params, Stream& rng,
                    const InterferenceField* field = nullptr);

}  // namespace compsel
