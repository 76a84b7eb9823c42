// SPDX-License-Identifier: Apache-2.0
#include "compsel/scheduling.hpp"

#include <algorithm>
#include <numeric>

#include "compsel/errors.hpp"
#include "compsel/precoding.hpp"

namespace compsel {

namespace {

std::vector<std::size_t> sample_without_replacement(std::vector<std::size_t> pool, std::size_t n,
                                                    Stream& rng) {
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(n);
  return pool;
}

CMatrix stack_columns(std::span<const CVector> channels, std::span<const std::size_t> order) {
  CMatrix m(channels[order.front()].size(), static_cast<Eigen::Index>(order.size()));
  for (std::size_t k = 0; k < order.size(); ++k)
    m.col(static_cast<Eigen::Index>(k)) = channels[order[k]];
  return m;
}

// sin^2 of every selected column against the others.
std::vector<double> per_user_sin2(std::span<const CVector> channels,
                                  std::span<const std::size_t> selected) {
  std::vector<double> out;
  out.reserve(selected.size());
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < selected.size(); ++k) {
    others.clear();
    for (std::size_t j = 0; j < selected.size(); ++j)
      if (j != k) others.push_back(selected[j]);
    const CMatrix partners = others.empty() ? CMatrix(channels[selected[k]].size(), 0)
                                            : stack_columns(channels, others);
    out.push_back(sin2_angle(channels[selected[k]], partners));
  }
  return out;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

Schedule random_schedule(std::span<const std::size_t> serving_cell, std::size_t users_per_bs,
                         std::size_t num_bs, Mode mode, Stream& rng) {
  Schedule s;
  s.mode = mode;
  if (mode == Mode::CoMP) {
    const std::size_t need = num_bs * users_per_bs;
    if (serving_cell.size() < need) throw SchedulingError("pool smaller than B*M");
    std::vector<std::size_t> pool(serving_cell.size());
    std::iota(pool.begin(), pool.end(), 0);
    s.selected = sample_without_replacement(std::move(pool), need, rng);
    return s;
  }
  for (std::size_t cell = 0; cell < num_bs; ++cell) {
    std::vector<std::size_t> pool;
    for (std::size_t u = 0; u < serving_cell.size(); ++u)
      if (serving_cell[u] == cell) pool.push_back(u);
    if (pool.size() < users_per_bs) throw SchedulingError("cell pool smaller than M");
    const auto picked = sample_without_replacement(std::move(pool), users_per_bs, rng);
    s.selected.insert(s.selected.end(), picked.begin(), picked.end());
  }
  return s;
}

SusResult sus_select(const CMatrix& channels, std::size_t target, const SusOptions& options) {
  SusResult out;
  const auto n = static_cast<std::size_t>(channels.cols());
  if (n == 0 || target == 0) return out;

  CMatrix residual = channels;
  Eigen::VectorXd norm = channels.colwise().norm().transpose();
  Eigen::VectorXd res_sq = norm.array().square();
  std::vector<char> eligible(n, 1);
  const double floor_sq = 1e-24 * norm.maxCoeff() * norm.maxCoeff();

  while (out.selected.size() < target) {
    std::size_t best = n;
    double best_sq = floor_sq;
    if (out.selected.empty() && options.first) {
      best = *options.first;
      if (best >= n) throw SchedulingError("forced first user out of range");
      best_sq = res_sq[static_cast<Eigen::Index>(best)];
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        const double r = res_sq[static_cast<Eigen::Index>(k)];
        if (eligible[k] && r > best_sq) {
          best_sq = r;
          best = k;
        }
      }
    }
    if (best == n) break;

    out.selected.push_back(best);
    out.residual_sq.push_back(best_sq);
    eligible[best] = 0;

    const CVector q = residual.col(static_cast<Eigen::Index>(best)) / std::sqrt(best_sq);
    const Eigen::RowVectorXcd proj = q.adjoint() * residual;
    residual.noalias() -= q * proj;
    res_sq = residual.colwise().squaredNorm().transpose();
    if (options.orthogonality_threshold) {
      const Eigen::RowVectorXcd corr = q.adjoint() * channels;
      for (std::size_t k = 0; k < n; ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        if (eligible[k] && norm[i] > 0.0 &&
            std::abs(corr[i]) / norm[i] >= *options.orthogonality_threshold)
          eligible[k] = 0;
      }
    }
  }
  return out;
}

SusResult sus_select(std::span<const CVector> channels, std::size_t target,
                     const SusOptions& options) {
  if (channels.empty()) return {};
  CMatrix m(channels.front().size(), static_cast<Eigen::Index>(channels.size()));
  for (std::size_t k = 0; k < channels.size(); ++k) {
    if (channels[k].size() != m.rows()) throw ShapeError("channel vectors differ in length");
    m.col(static_cast<Eigen::Index>(k)) = channels[k];
  }
  return sus_select(m, target, options);
}

Schedule sus_schedule(std::span<const CVector> channels, std::span<const std::size_t> serving_cell,
                      std::size_t users_per_bs, std::size_t num_bs, Mode mode,
                      const SusOptions& options) {
  if (channels.size() != serving_cell.size()) throw ShapeError("one cell index per channel");
  Schedule s;
  s.mode = mode;
  if (mode == Mode::CoMP) {
    s.selected = sus_select(channels, num_bs * users_per_bs, options).selected;
    return s;
  }
  for (std::size_t cell = 0; cell < num_bs; ++cell) {
    std::vector<std::size_t> ids;
    std::vector<CVector> local;
    for (std::size_t u = 0; u < channels.size(); ++u)
      if (serving_cell[u] == cell) {
        ids.push_back(u);
        local.push_back(channels[u]);
      }
    for (std::size_t k : sus_select(local, users_per_bs, options).selected)
      s.selected.push_back(ids[k]);
  }
  return s;
}

double expected_orthogonality(OrthogonalityModel model, std::size_t num_bs,
                              std::size_t num_antennas, std::size_t users_per_bs, Mode mode) {
  if (users_per_bs < 1 || users_per_bs > num_antennas)
    throw DimensionError("M must lie in [1, N_t]");
  if (model == OrthogonalityModel::LargePool) return 1.0;
  const double nt = static_cast<double>(num_antennas);
  const double m = static_cast<double>(users_per_bs);
  if (mode == Mode::NonCoMP) return (nt - m + 1.0) / nt;
  const double b = static_cast<double>(num_bs);
  return (b * nt - b * m + 1.0) / (b * nt);
}

OrthogonalityEstimate estimate_orthogonality(const OrthogonalityStudy& study, std::size_t trials,
                                             std::uint64_t seed, const ExecPolicy& policy) {
  if (trials < 1) throw ConfigError("need at least one trial");
  const std::size_t bs = study.num_bs;
  const std::size_t nt = study.num_antennas;
  const std::size_t m = study.users_per_bs;
  if (study.geometry && study.geometry->num_bs() != bs)
    throw ConfigError("geometry and study disagree on B");
  const std::size_t per_cell =
      study.scheduler == SchedulerKind::Sus ? study.users_per_cell : std::max(m, study.users_per_cell);
  if (per_cell < m) throw SchedulingError("fewer candidates than M");

  SusOptions sus_opts;
  sus_opts.orthogonality_threshold = study.sus_threshold;

  auto one_trial = [&](std::size_t t) -> OrthogonalityEstimate {
    Stream rng = derive_substream(seed, t);

    // Large-scale gains per candidate; unit gains without a layout.
    std::vector<LinkGains> gains;
    std::vector<std::size_t> cells;
    if (study.geometry) {
      const UserDrop drop = drop_users(*study.geometry, per_cell, study.min_dist, rng);
      for (std::size_t u = 0; u < drop.size(); ++u) {
        gains.push_back(link_gains(*study.geometry, drop.positions[u]));
        cells.push_back(drop.serving_bs[u]);
      }
    } else {
      for (std::size_t cell = 0; cell < bs; ++cell)
        for (std::size_t k = 0; k < per_cell; ++k) {
          gains.push_back(LinkGains{std::vector<double>(bs, 1.0), cell});
          cells.push_back(cell);
        }
    }

    std::vector<CVector> local(gains.size());
    std::vector<CVector> global(gains.size());
    std::vector<CVector> smalls(bs);
    for (std::size_t u = 0; u < gains.size(); ++u) {
      for (auto& g : smalls) g = draw_small_scale(rng, nt);
      global[u] = assemble_global(gains[u], smalls);
      local[u] = std::sqrt(gains[u].serving_gain()) * smalls[gains[u].serving];
    }

    Schedule nc, comp;
    if (study.scheduler == SchedulerKind::Random) {
      nc = random_schedule(cells, m, bs, Mode::NonCoMP, rng);
      comp = random_schedule(cells, m, bs, Mode::CoMP, rng);
    } else {
      nc = sus_schedule(local, cells, m, bs, Mode::NonCoMP, sus_opts);
      comp = sus_schedule(global, cells, m, bs, Mode::CoMP, sus_opts);
    }

    // Lambda is measured per cell among that cell's picks.
    std::vector<double> lambdas;
    for (std::size_t cell = 0; cell < bs; ++cell) {
      std::vector<std::size_t> picks;
      for (std::size_t u : nc.selected)
        if (cells[u] == cell) picks.push_back(u);
      if (picks.empty()) continue;
      const auto s = per_user_sin2(local, picks);
      lambdas.insert(lambdas.end(), s.begin(), s.end());
    }
    return {mean(lambdas), mean(per_user_sin2(global, comp.selected))};
  };

  const auto results = map_trials<OrthogonalityEstimate>(trials, policy, one_trial);
  OrthogonalityEstimate total;
  for (const auto& r : results) {
    total.lambda += r.lambda;
    total.delta += r.delta;
  }
  total.lambda /= static_cast<double>(trials);
  total.delta /= static_cast<double>(trials);
  return total;
}

}  // namespace compsel
