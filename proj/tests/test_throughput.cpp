// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "compsel/errors.hpp"
#include "compsel/throughput.hpp"
#include "oracles.hpp"

using namespace compsel;

TEST_SUITE("throughput") {
  TEST_CASE("overheads at the default pilot budget") {
    const OverheadModel m;
    CHECK(overhead(m, Mode::NonCoMP, 3, 4) == doctest::Approx(0.12592).epsilon(1e-9));
    CHECK(overhead(m, Mode::CoMP, 3, 4) == doctest::Approx(0.28096).epsilon(1e-9));
    OverheadModel sparse = m;
    sparse.beta = 0.75;
    CHECK(overhead(sparse, Mode::CoMP, 3, 4) == doctest::Approx(0.28096 - 3.0 * (0.28096 - 0.12592) / 8.0).epsilon(1e-9));
    CHECK(overhead(m, Mode::CoMP, 1, 4) == overhead(m, Mode::NonCoMP, 1, 4));
  }

  TEST_CASE("overhead validation") {
    OverheadModel m;
    m.coherence_uses = 100.0;
    CHECK_THROWS_AS(overhead(m, Mode::CoMP, 3, 4), InfeasibleOverheadError);
    m = {};
    m.beta = 1.2;
    CHECK_THROWS_AS(overhead(m, Mode::CoMP, 3, 4), ConfigError);
    m = {};
    m.epsilon = 0.5;
    CHECK_THROWS_AS(overhead(m, Mode::CoMP, 3, 4), ConfigError);
    m = {};
    m.coherence_uses = 0.0;
    CHECK_THROWS_AS(overhead(m, Mode::NonCoMP, 3, 4), ConfigError);
  }

  TEST_CASE("net rate") {
    CHECK(net_rate(0.0, 1.0) == doctest::Approx(1.0));
    CHECK(net_rate(0.5, 3.0) == doctest::Approx(1.0));
    CHECK(net_rate(0.28096, 15.0) == doctest::Approx(2.87616));
  }

  TEST_CASE("Jensen bound") {
    CHECK(jensen_bound(0.2, 4.0) == net_rate(0.2, 4.0));
    std::mt19937_64 rng(1);
    std::exponential_distribution<double> ex(1.0);
    const int n = 200000;
    double rate = 0.0, sinr = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = ex(rng);
      rate += net_rate(0.0, s);
      sinr += s;
    }
    rate /= n;
    // E log2(1 + X), X ~ Exp(1), is e E1(1) / ln 2 = 0.86029...
    CHECK(rate == doctest::Approx(0.8603).epsilon(0.01));
    CHECK(rate <= jensen_bound(0.0, sinr / n));
    CHECK(jensen_bound(0.0, 1.0) == doctest::Approx(1.0));
  }

  TEST_CASE("eta matches the extended-precision oracle") {
    CHECK(eta(0.12592, 9.0) == doctest::Approx(oracle::eta(0.12592, 9.0)).epsilon(1e-12));
    CHECK(eta(0.12592, 9.0) == doctest::Approx(0.7203).epsilon(1e-4));
    for (double g : {1e-6, 0.3, 1.0, 17.0, 1e3, 1e6}) {
      CHECK(eta(0.0, g) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(eta(0.28, g) == doctest::Approx(oracle::eta(0.28, g)).epsilon(1e-10));
    }
    CHECK(eta(0.3, 0.0) == doctest::Approx(0.7));
    CHECK(eta(0.3, 1e-12) == doctest::Approx(0.7).epsilon(1e-9));
  }

  TEST_CASE("eta identity over the SINR range") {
    for (double v : {0.0, 0.05, 0.12592, 0.28096, 0.7}) {
      for (double lg = -6.0; lg <= 6.0; lg += 0.25) {
        const double g = std::pow(10.0, lg);
        const double lhs = std::log2(1.0 + eta(v, g) * g);
        const double rhs = (1.0 - v) * std::log2(1.0 + g);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
      }
    }
  }

  TEST_CASE("eta decreases in v and in the mean SINR") {
    for (double g : {0.1, 1.0, 10.0, 100.0}) {
      double prev = 2.0;
      for (double v = 0.0; v < 0.95; v += 0.05) {
        const double e = eta(v, g);
        CHECK(e < prev);
        prev = e;
      }
    }
    for (double v : {0.1, 0.3}) {
      double prev = 2.0;
      for (double lg = -3.0; lg <= 4.0; lg += 0.5) {
        const double e = eta(v, std::pow(10.0, lg));
        CHECK(e < prev);
        prev = e;
      }
    }
  }

  TEST_CASE("eta ordering 0 < eta_C < eta_NC < 1") {
    for (double vnc = 0.02; vnc < 0.5; vnc += 0.06)
      for (double vc = vnc + 0.01; vc < 0.9; vc += 0.07)
        for (double gnc = 0.01; gnc < 200.0; gnc *= 3.1)
          for (double f : {1.0, 1.5, 4.0, 30.0}) {
            const double ec = eta(vc, gnc * f);
            const double enc = eta(vnc, gnc);
            CHECK(0.0 < ec);
            CHECK(ec < enc);
            CHECK(enc < 1.0);
          }
  }

  TEST_CASE("closed-form mean SINR") {
    const LinkGains single{{2.0}, 0};
    CHECK(mean_sinr_approx(Mode::NonCoMP, single, 1.0, 0.5, 4, 2) == doctest::Approx(8.0));
    const LinkGains equal{{1.0, 1.0, 1.0}, 0};
    CHECK(mean_sinr_approx(Mode::CoMP, equal, 1.0, 0.1, 4, 2) == doctest::Approx(60.0));
    CHECK(mean_sinr_approx(Mode::CoMP, equal, 1.0, 0.1, 4, 2, 7.0 / 12.0) ==
          doctest::Approx(35.0));
    CHECK(mean_sinr_approx(Mode::NonCoMP, equal, 1.0, 0.1, 4, 2) ==
          doctest::Approx(2.0 / 2.1));
  }
}
