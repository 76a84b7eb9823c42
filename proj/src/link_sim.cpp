// SPDX-License-Identifier: Apache-2.0
#include "compsel/link_sim.hpp"

#include <algorithm>
#include <cmath>

#include "compsel/errors.hpp"
#include "compsel/precoding.hpp"
#include "compsel/scheduling.hpp"

namespace compsel {

namespace {

CMatrix columns_of(std::span<const CVector> channels, std::size_t first,
                   std::span<const std::size_t> rest) {
  CMatrix m(channels[first].size(), static_cast<Eigen::Index>(rest.size() + 1));
  m.col(0) = channels[first];
  for (std::size_t k = 0; k < rest.size(); ++k)
    m.col(static_cast<Eigen::Index>(k + 1)) = channels[rest[k]];
  return m;
}

}  // namespace

BlockChannels draw_block(std::span<const LinkGains> gains, std::size_t num_antennas,
                         Stream& rng) {
  BlockChannels block;
  block.small.resize(gains.size());
  block.global.resize(gains.size());
  block.local.resize(gains.size());
  for (std::size_t u = 0; u < gains.size(); ++u) {
    auto& smalls = block.small[u];
    smalls.reserve(gains[u].alpha_sq.size());
    for (std::size_t i = 0; i < gains[u].alpha_sq.size(); ++i)
      smalls.push_back(draw_small_scale(rng, num_antennas));
    block.global[u] = assemble_global(gains[u], smalls);
    block.local[u] = std::sqrt(gains[u].serving_gain()) * smalls[gains[u].serving];
  }
  return block;
}

std::vector<std::size_t> pick_partners(std::size_t user, std::span<const std::size_t> candidates,
                                       std::span<const CVector> channels, std::size_t group_size,
                                       const LinkParams& params, Stream& rng) {
  const std::size_t want = std::min(group_size > 0 ? group_size - 1 : 0, candidates.size());
  if (want == 0) return {};

  if (params.scheduler == SchedulerKind::Random) {
    std::vector<std::size_t> pool(candidates.begin(), candidates.end());
    for (std::size_t i = 0; i < want; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(want);
    return pool;
  }

  const CMatrix pool = columns_of(channels, user, candidates);
  SusOptions opts;
  opts.first = 0;
  opts.orthogonality_threshold = params.sus_threshold;
  const SusResult picked = sus_select(pool, want + 1, opts);
  std::vector<std::size_t> partners;
  for (std::size_t k = 1; k < picked.selected.size(); ++k)
    partners.push_back(candidates[picked.selected[k] - 1]);
  return partners;
}

InterferenceField build_interference(const BlockChannels& block, std::span<const LinkGains> gains,
                                     const LinkParams& params, Stream& rng) {
  InterferenceField field;
  field.precoders.resize(params.num_bs);
  for (std::size_t cell = 0; cell < params.num_bs; ++cell) {
    std::vector<std::size_t> members;
    for (std::size_t u = 0; u < gains.size(); ++u)
      if (gains[u].serving == cell) members.push_back(u);
    if (members.empty()) {
      field.precoders[cell] = CMatrix::Zero(static_cast<Eigen::Index>(params.num_antennas), 0);
      continue;
    }
    const std::size_t lead = members.front();
    const std::span<const std::size_t> rest(members.data() + 1, members.size() - 1);
    std::vector<std::size_t> chosen{lead};
    if (params.scheduler == SchedulerKind::Sus) {
      std::vector<CVector> pool;
      for (std::size_t u : members) pool.push_back(block.local[u]);
      SusOptions opts;
      opts.orthogonality_threshold = params.sus_threshold;
      chosen.clear();
      for (std::size_t k : sus_select(pool, params.users_per_bs, opts).selected)
        chosen.push_back(members[k]);
    } else {
      const auto partners = pick_partners(lead, rest, block.local, params.users_per_bs, params, rng);
      chosen.insert(chosen.end(), partners.begin(), partners.end());
    }
    CMatrix g(static_cast<Eigen::Index>(params.num_antennas),
              static_cast<Eigen::Index>(chosen.size()));
    for (std::size_t k = 0; k < chosen.size(); ++k)
      g.col(static_cast<Eigen::Index>(k)) = block.small[chosen[k]][cell];
    std::vector<LinkGains> chosen_gains;
    for (std::size_t u : chosen) chosen_gains.push_back(gains[u]);
    field.precoders[cell] =
        noncomp_precode(g, params.tx_power, params.users_per_bs, chosen_gains, params.noise)
            .precoders;
  }
  return field;
}

double comp_sinr(std::size_t user, std::span<const std::size_t> candidates,
                 const BlockChannels& block, const LinkParams& params, Stream& rng) {
  const auto partners = pick_partners(user, candidates, block.global,
                                      params.num_bs * params.users_per_bs, params, rng);
  const CMatrix h = columns_of(block.global, user, partners);
  return params.tx_power * effective_gain(h) /
         (static_cast<double>(params.users_per_bs) * params.noise);
}

double noncomp_sinr(std::size_t user, std::span<const std::size_t> candidates,
                    const BlockChannels& block, std::span<const LinkGains> gains,
                    const LinkParams& params, Stream& rng, const InterferenceField* field) {
  const LinkGains& g = gains[user];
  const auto partners =
      pick_partners(user, candidates, block.local, params.users_per_bs, params, rng);

  CMatrix local(static_cast<Eigen::Index>(params.num_antennas),
                static_cast<Eigen::Index>(partners.size() + 1));
  local.col(0) = block.small[user][g.serving];
  for (std::size_t k = 0; k < partners.size(); ++k)
    local.col(static_cast<Eigen::Index>(k + 1)) = block.small[partners[k]][g.serving];

  double ici = params.tx_power * g.interference_sum();
  if (params.ici == IciModel::Instantaneous) {
    if (!field) throw ConfigError("instantaneous ICI needs an interference field");
    ici = 0.0;
    for (std::size_t i = 0; i < g.alpha_sq.size(); ++i) {
      if (i == g.serving) continue;
      const CMatrix& w = field->precoders.at(i);
      if (w.cols() == 0) continue;
      ici += g.alpha_sq[i] * (block.small[user][i].adjoint() * w).squaredNorm();
    }
  }
  return params.tx_power * g.serving_gain() * effective_gain(local) /
         (static_cast<double>(params.users_per_bs) * (ici + params.noise));
}

}  // namespace compsel
