// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "compsel/config.hpp"
#include "compsel/errors.hpp"
#include "compsel/experiments.hpp"
#include "compsel/link_sim.hpp"
#include "compsel/report.hpp"
#include "compsel/rng.hpp"

using namespace compsel;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.drops = 40;
  c.fading_blocks = 10;
  c.orthogonality_trials = 500;
  return c;
}

}  // namespace

TEST_SUITE("rng") {
  TEST_CASE("substreams depend only on their path") {
    auto a = derive_substream(5, {1, 2, 3});
    auto b = derive_substream(5, {1, 2, 3});
    for (int i = 0; i < 100; ++i) CHECK(a() == b());
    auto c = derive_substream(5, 7);
    auto d = derive_substream(5, 8);
    auto e = derive_substream(6, 7);
    const auto cv = c();
    CHECK(cv != d());
    CHECK(cv != e());
    CHECK(derive_substream(5, {1, 2})() != derive_substream(5, {2, 1})());
  }
}

TEST_SUITE("config") {
  TEST_CASE("defaults") {
    const ExperimentConfig c;
    CHECK(c.num_bs == 3);
    CHECK(c.cell_radius == 250.0);
    CHECK(c.pathloss_exponent == 3.76);
    CHECK(c.users_per_cell == 10);
    CHECK(c.num_antennas == 4);
    CHECK(c.users_per_bs == 2);
    CHECK(c.coherence_uses == 500.0);
    CHECK(c.drops == 1000);
    CHECK(c.fading_blocks == 100);
    CHECK_NOTHROW(validate(c));
    CHECK(m_estimates(c) == std::vector<std::size_t>{1, 2});
    const auto grid = coherence_grid(c);
    REQUIRE(grid.size() == 13);
    CHECK(grid.front() == doctest::Approx(234.0));
    CHECK(grid.back() == doctest::Approx(35899.0));
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
  }

  TEST_CASE("parse key = value with comments and lists") {
    const auto c = parse_config(
        "# comment\n"
        "num_antennas = 8   # trailing\n"
        "snr_edge_db = 10, 0\n"
        "scheduler = random\n"
        "eta_mode = accurate\n"
        "ici_model = instantaneous\n"
        "seed = 18446744073709551615\n"
        "\n"
        "coherence_time = 2\n"
        "coherence_bandwidth = 300\n");
    CHECK(c.num_antennas == 8);
    CHECK(c.snr_edge_db == std::vector<double>{10.0, 0.0});
    CHECK(c.scheduler == SchedulerKind::Random);
    CHECK(c.eta_mode == EtaMode::Accurate);
    CHECK(c.ici_model == IciModel::Instantaneous);
    CHECK(c.seed == 18446744073709551615ULL);
    CHECK(overhead_model(c).coherence_uses == 600.0);
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_config("no_such_key = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("num_bs\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("cell_radius = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scheduler = greedy\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("drops = -3\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/compsel.cfg"), ConfigError);
  }

  TEST_CASE("validation") {
    ExperimentConfig c;
    c.num_bs = 2;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = {};
    c.users_per_bs = 5;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = {};
    c.coherence_uses = 50.0;
    CHECK_THROWS_AS(validate(c), InfeasibleOverheadError);
    c = {};
    c.m_estimates = {9};
    CHECK_THROWS_AS(validate(c), ConfigError);
  }

  TEST_CASE("describe round-trips through the parser") {
    ExperimentConfig c;
    c.snr_edge_db = {7.5, -2.0};
    c.scheduler = SchedulerKind::Random;
    c.seed = 99;
    std::string text;
    for (const auto& [k, v] : describe(c)) text += k + " = " + v + "\n";
    const auto back = parse_config(text);
    CHECK(describe(back) == describe(c));
  }
}

TEST_SUITE("report") {
  TEST_CASE("csv layout") {
    Report r;
    r.id = "demo";
    r.seed = 3;
    r.config = {{"a", "1"}};
    r.notes = {"n=2"};
    r.columns = {{"x", "first"}, {"y", "second"}};
    r.add_row({1.0, 0.1});
    r.add_row({2.5, 1e-12});
    CHECK(to_csv(r) == "# experiment=demo\n# seed=3\n# a=1\n# n=2\nx,y\n1,0.1\n2.5,1e-12\n");
    CHECK(r.column_index("y") == 1);
    CHECK_THROWS(r.add_row({1.0}));
    const std::vector<Report> all{r};
    CHECK(columns_doc(all) == "demo.csv\n  x: first\n  y: second\n\n");
  }

  TEST_CASE("catalog covers every written report") {
    std::set<std::string> ids;
    for (const auto& r : report_catalog()) ids.insert(r.id);
    CHECK(ids == std::set<std::string>{"fig1", "fig2", "fig3", "fig4", "fig5", "fig5_users",
                                       "table1"});
  }
}

TEST_SUITE("experiments") {
  TEST_CASE("drops are shared across experiments and thread counts") {
    const auto c = small_config();
    const auto g = make_geometry(c);
    const auto a = make_drops(c, g, kSerial);
    const auto b = make_drops(c, g, {Execution::Parallel, 3});
    REQUIRE(a.gains.size() == c.drops);
    for (std::size_t d = 0; d < c.drops; ++d)
      for (std::size_t u = 0; u < a.gains[d].size(); ++u)
        CHECK(a.gains[d][u].alpha_sq == b.gains[d][u].alpha_sq);
  }

  TEST_CASE("backhaul loads") {
    const BackhaulModel m;
    const auto zero = backhaul_loads(m, 3, 2, 0.0);
    CHECK(zero.noncomp == doctest::Approx(112e6));
    CHECK(zero.comp == doctest::Approx(336e6));
    CHECK(zero.mode_selection == doctest::Approx(zero.noncomp));
    CHECK(backhaul_loads(m, 3, 2, 1.0).mode_selection == doctest::Approx(336e6));
    CHECK(backhaul_loads(m, 3, 2, 0.54).mode_selection == doctest::Approx(232.96e6));
    for (double p = 0.0; p <= 1.0; p += 0.05) {
      const auto l = backhaul_loads(m, 3, 2, p);
      CHECK(l.mode_selection == doctest::Approx(p * l.comp + (1 - p) * l.noncomp).epsilon(1e-12));
      CHECK(l.noncomp <= l.mode_selection);
      CHECK(l.mode_selection <= l.comp);
    }
    CHECK_THROWS_AS(backhaul_loads(m, 3, 2, 1.5), DomainError);
  }

  TEST_CASE("fig1: curves nondecreasing along the ray, crossing shrinks with SNR") {
    const auto r = run_fig1(small_config());
    REQUIRE(r.curves.size() == 3);
    for (const auto& c : r.curves)
      for (std::size_t i = 1; i < c.distance.size(); ++i)
        CHECK(c.variable_db[i] >= c.variable_db[i - 1]);
    CHECK(r.curves[0].analytic_crossing.value() < r.curves[1].analytic_crossing.value());
    CHECK(r.curves[1].analytic_crossing.value() < r.curves[2].analytic_crossing.value());
    CHECK(r.sus_orthogonality.lambda > 0.75);
    CHECK(r.report.rows.size() == 3 * r.curves[0].distance.size());
  }

  TEST_CASE("fig2: zero error for the true M") {
    const auto r = run_fig2(small_config());
    CHECK(r.points.size() == 22);
    for (const auto& p : r.points) {
      if (p.m_est == 2) CHECK(p.error == 0.0);
      CHECK(std::isfinite(p.error));
    }
  }

  TEST_CASE("fig3: share grows with C, with SNR and when beta drops") {
    auto c = small_config();
    c.drops = 100;
    const auto r = run_fig3(c, kSerial);
    const auto grid = coherence_grid(c);
    auto at = [&](double beta, std::size_t gi, double snr) {
      for (const auto& p : r.points)
        if (p.beta == beta && p.coherence_uses == grid[gi] && p.snr_db == snr) return p.percent_comp;
      FAIL("missing point");
      return 0.0;
    };
    for (double snr : c.snr_edge_db)
      for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(at(1.0, i, snr) >= at(1.0, i - 1, snr));
        CHECK(at(0.75, i, snr) >= at(1.0, i, snr));
      }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(at(1.0, i, 10.0) >= at(1.0, i, 5.0));
      CHECK(at(1.0, i, 5.0) >= at(1.0, i, 0.0));
    }
  }

  TEST_CASE("fig5: small run is identical serially and in parallel") {
    auto c = small_config();
    c.drops = 6;
    c.fading_blocks = 4;
    const auto a = run_fig5(c, kSerial);
    const auto b = run_fig5(c, {Execution::Parallel, 4});
    CHECK(to_csv(a.users) == to_csv(b.users));
    CHECK(to_csv(a.binned) == to_csv(b.binned));
    for (const auto& run : a.runs) {
      CHECK(run.users.size() == 6 * 30);
      CHECK(run.jensen_violations == 0);
    }
  }

  TEST_CASE("fig5 with instantaneous ICI runs") {
    auto c = small_config();
    c.drops = 2;
    c.fading_blocks = 3;
    c.ici_model = IciModel::Instantaneous;
    const auto run = simulate_fig5(c, 5.0, kSerial);
    CHECK(run.users.size() == 60);
    for (const auto& u : run.users) CHECK(u.rate_nc > 0.0);
  }

  TEST_CASE("table1: term identity") {
    const auto r = run_table1(small_config(), kSerial);
    for (const auto& row : r.rows) {
      CHECK(std::abs(row.term_a_db + row.term_b_db - row.variable_db) < 0.01);
      CHECK(row.percent_comp > 0.0);
    }
  }
}

TEST_SUITE("link_sim") {
  TEST_CASE("partners: size and membership") {
    ExperimentConfig c;
    const auto g = make_geometry(c);
    Stream rng(1);
    const auto drop = drop_users(g, 10, 1.0, rng);
    std::vector<LinkGains> gains;
    for (auto p : drop.positions) gains.push_back(link_gains(g, p));
    const auto block = draw_block(gains, 4, rng);
    std::vector<std::size_t> cand;
    for (std::size_t u = 1; u < gains.size(); ++u) cand.push_back(u);
    for (auto sched : {SchedulerKind::Sus, SchedulerKind::Random}) {
      LinkParams p = link_params(c, 5.0);
      p.scheduler = sched;
      const auto partners = pick_partners(0, cand, block.global, 6, p, rng);
      CHECK(partners.size() <= 5);
      for (auto v : partners) CHECK(v != 0);
      CHECK(std::set(partners.begin(), partners.end()).size() == partners.size());
    }
  }

  TEST_CASE("isolated user SINR reduces to the single-user forms") {
    ExperimentConfig c;
    LinkParams p = link_params(c, 10.0);
    const std::vector<LinkGains> gains{{{2.0, 0.3, 0.1}, 0}};
    Stream rng(2);
    const auto block = draw_block(gains, 4, rng);
    const std::vector<std::size_t> none;
    CHECK(comp_sinr(0, none, block, p, rng) ==
          doctest::Approx(p.tx_power * block.global[0].squaredNorm() / (2.0 * p.noise)));
    CHECK(noncomp_sinr(0, none, block, gains, p, rng) ==
          doctest::Approx(p.tx_power * block.local[0].squaredNorm() /
                          (2.0 * (p.tx_power * 0.4 + p.noise))));
  }
}
