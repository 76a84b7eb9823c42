// SPDX-License-Identifier: Apache-2.0
#include "compsel/validation.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "compsel/errors.hpp"
#include "compsel/experiments.hpp"
#include "compsel/precoding.hpp"
#include "compsel/scheduling.hpp"
#include "compsel/throughput.hpp"

namespace compsel {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

CheckResult check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

CMatrix random_channels(Stream& rng, std::size_t rows, std::size_t cols) {
  CMatrix h(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t k = 0; k < cols; ++k)
    h.col(static_cast<Eigen::Index>(k)) = draw_small_scale(rng, rows);
  return h;
}

}  // namespace

std::vector<CheckResult> run_property_checks(const ExperimentConfig& config, std::size_t trials,
                                             const ExecPolicy& policy) {
  validate(config);
  std::vector<CheckResult> out;
  const OverheadModel model = overhead_model(config);
  const std::size_t b = config.num_bs, nt = config.num_antennas, m = config.users_per_bs;

  {
    const double v_nc = overhead(model, Mode::NonCoMP, b, nt);
    const double v_c = overhead(model, Mode::CoMP, b, nt);
    const double c = model.coherence_uses;
    const double want_nc = (nt * model.common_pilot_uses +
                            model.streams_per_user * model.dedicated_pilot_uses) / c;
    const double want_c = (model.beta * b * nt * model.common_pilot_uses +
                           model.epsilon * model.streams_per_user * model.dedicated_pilot_uses) / c;
    out.push_back(check("overhead_formula",
                        std::abs(v_nc - want_nc) < 1e-12 && std::abs(v_c - want_c) < 1e-12 &&
                            v_nc <= v_c,
                        "v_nc=" + num(v_nc) + " v_c=" + num(v_c)));
  }

  {
    const double lam = expected_orthogonality(OrthogonalityModel::Random, b, nt, m, Mode::NonCoMP);
    const double del = expected_orthogonality(OrthogonalityModel::Random, b, nt, m, Mode::CoMP);
    const bool order = b == 1 || m < 2 || del < lam;
    out.push_back(check("orthogonality_order", order,
                        "E_lambda=" + num(lam) + " E_delta=" + num(del)));

    OrthogonalityStudy study;
    study.scheduler = SchedulerKind::Random;
    study.num_bs = b;
    study.num_antennas = nt;
    study.users_per_bs = m;
    study.users_per_cell = config.users_per_cell;
    const auto est = estimate_orthogonality(study, trials, config.seed, policy);
    const double err = std::max(std::abs(est.lambda / lam - 1.0), std::abs(est.delta / del - 1.0));
    out.push_back(check("orthogonality_random_mc", err < 0.01,
                        "lambda=" + num(est.lambda) + " delta=" + num(est.delta) +
                            " rel_err=" + num(err)));
  }

  {
    Stream rng = derive_substream(config.seed, {0xA11CEULL});
    double leak = 0.0;
    double angle = 0.0;
    const std::size_t rows = b * nt;
    const std::size_t cols = b * m;
    for (int i = 0; i < 1000; ++i) {
      const CMatrix h = random_channels(rng, rows, cols);
      const auto pre = comp_precode(h, config.tx_power, b, m, 1.0);
      leak = std::max(leak, max_iui_leakage(h, pre.precoders));
      const double e1 = effective_gain(h);
      const double e2 = effective_gain_projection(h);
      angle = std::max(angle, std::abs(e1 - e2) / std::abs(e2));
    }
    out.push_back(check("zero_forcing_leakage", leak < 1e-9, "max_leakage=" + num(leak)));
    out.push_back(check("projection_identity", angle < 1e-9, "max_rel_diff=" + num(angle)));
  }

  {
    Stream rng = derive_substream(config.seed, {0x1C1ULL});
    const double alpha_sq = 0.37;
    const double got = ici_expectation_check(alpha_sq, config.tx_power, m, nt, rng, trials);
    const double want = config.tx_power * alpha_sq;
    out.push_back(check("ici_expectation", std::abs(got / want - 1.0) < 0.03,
                        "mean=" + num(got) + " expected=" + num(want)));
  }

  {
    const BackhaulModel bh{config.backhaul_bandwidth, config.spectral_rate};
    double worst = 0.0;
    bool ordered = true;
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const auto l = backhaul_loads(bh, b, m, p);
      const double mix = p * l.comp + (1.0 - p) * l.noncomp;
      worst = std::max(worst, std::abs(l.mode_selection - mix) / l.comp);
      ordered = ordered && l.noncomp <= l.mode_selection * (1 + 1e-15) &&
                l.mode_selection <= l.comp * (1 + 1e-15);
    }
    out.push_back(check("backhaul_identity", worst < 1e-6 && ordered,
                        "max_rel_diff=" + num(worst)));
  }

  {
    ExperimentConfig small = config;
    small.drops = std::min<std::size_t>(config.drops, 8);
    small.fading_blocks = std::min<std::size_t>(config.fading_blocks, 5);
    small.fig5_snr_db = {config.snr_edge_db.front()};
    ExecPolicy par = policy;
    par.mode = Execution::Parallel;
    if (par.threads < 2) par.threads = 4;
    const auto serial = run_fig5(small, kSerial);
    const auto parallel = run_fig5(small, par);
    const bool same = to_csv(serial.users) == to_csv(parallel.users) &&
                      to_csv(serial.binned) == to_csv(parallel.binned);
    out.push_back(check("serial_parallel_identical", same, "drops=" + std::to_string(small.drops)));
    std::size_t violations = 0;
    for (const auto& r : serial.runs) violations += r.jensen_violations;
    out.push_back(check("jensen_bound", violations == 0,
                        "violations=" + std::to_string(violations)));
  }

  return out;
}

}  // namespace compsel
