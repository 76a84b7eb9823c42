// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "compsel/fading.hpp"
#include "compsel/geometry.hpp"
#include "compsel/mode.hpp"
#include "compsel/parallel.hpp"
#include "compsel/rng.hpp"

namespace compsel {

struct Schedule {
  Mode mode = Mode::NonCoMP;
  std::vector<std::size_t> selected;
};

/// Uniform selection without replacement. `serving_cell[u]` is the cell of
/// candidate u. CoMP draws B*M users from the whole pool; Non-CoMP draws M
/// users from every cell.
Schedule random_schedule(std::span<const std::size_t> serving_cell, std::size_t users_per_bs,
                         std::size_t num_bs, Mode mode, Stream& rng);

struct SusOptions {
  /// Candidates whose normalized correlation with a picked direction reaches
  /// this value are dropped from the pool. Unset: plain greedy selection.
  std::optional<double> orthogonality_threshold;
  /// Force this candidate as the first pick instead of the largest-norm one.
  std::optional<std::size_t> first;
};

struct SusResult {
  std::vector<std::size_t> selected;
  /// Squared norm of each pick's component orthogonal to the earlier picks.
  std::vector<double> residual_sq;
};

/// Greedy semi-orthogonal selection: each step takes the candidate with the
/// largest component orthogonal to the span of the channels already taken.
/// Stops early when every remaining candidate lies in that span.
SusResult sus_select(std::span<const CVector> channels, std::size_t target,
                     const SusOptions& options = {});
/// Same selection over the columns of `channels`.
SusResult sus_select(const CMatrix& channels, std::size_t target, const SusOptions& options = {});

/// SUS per mode: one selection of B*M over the pool for CoMP, M per cell for
/// Non-CoMP. For Non-CoMP the caller passes the users' local channels.
Schedule sus_schedule(std::span<const CVector> channels, std::span<const std::size_t> serving_cell,
                      std::size_t users_per_bs, std::size_t num_bs, Mode mode,
                      const SusOptions& options = {});

enum class OrthogonalityModel { Random, LargePool };

/// E{lambda_{M-1}} = (N_t - M + 1)/N_t and E{delta_{BM-1}} = (BN_t - BM + 1)/(BN_t)
/// under random scheduling; 1 for a large candidate pool.
double expected_orthogonality(OrthogonalityModel model, std::size_t num_bs,
                              std::size_t num_antennas, std::size_t users_per_bs, Mode mode);

struct OrthogonalityStudy {
  SchedulerKind scheduler = SchedulerKind::Random;
  std::size_t num_bs = 3;
  std::size_t num_antennas = 4;
  std::size_t users_per_bs = 2;
  /// Candidates per cell for SUS.
  std::size_t users_per_cell = 10;
  /// When set, users are dropped on this layout and channels carry path loss;
  /// otherwise all users have unit large-scale gains.
  const NetworkGeometry* geometry = nullptr;
  double min_dist = 1.0;
  std::optional<double> sus_threshold;
};

struct OrthogonalityEstimate {
  double lambda = 0.0;
  double delta = 0.0;
};

/// Monte Carlo means of lambda_{M-1} and delta_{BM-1} over the scheduled users.
OrthogonalityEstimate estimate_orthogonality(const OrthogonalityStudy& study, std::size_t trials,
                                             std::uint64_t seed, const ExecPolicy& policy = {});

}  // namespace compsel
