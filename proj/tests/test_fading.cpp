// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "compsel/errors.hpp"
#include "compsel/fading.hpp"

using namespace compsel;

TEST_SUITE("fading") {
  TEST_CASE("small-scale entries are unit-power circular Gaussian") {
    std::mt19937_64 rng(11);
    CHECK(draw_small_scale(rng, 4).size() == 4);
    const int n = 100000;
    double power = 0.0, re = 0.0, im = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto g = draw_small_scale(rng, 1);
      power += std::norm(g[0]);
      re += g[0].real();
      im += g[0].imag();
    }
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(re / n) < 0.02);
    CHECK(std::abs(im / n) < 0.02);
  }

  TEST_CASE("global vector stacks the scaled per-BS vectors") {
    std::mt19937_64 rng(5);
    LinkGains one{{2.5}, 0};
    const std::vector<CVector> g1{draw_small_scale(rng, 4)};
    CHECK((assemble_global(one, g1) - std::sqrt(2.5) * g1[0]).norm() < 1e-15);

    LinkGains unit{{1.0, 1.0, 1.0}, 0};
    std::vector<CVector> g3;
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      g3.push_back(draw_small_scale(rng, 4));
      sum += g3.back().squaredNorm();
    }
    CHECK(assemble_global(unit, g3).squaredNorm() == doctest::Approx(sum));
  }

  TEST_CASE("mean global norm is N_t times the gain sum") {
    std::mt19937_64 rng(6);
    LinkGains gains{{1.3, 0.2, 0.05}, 0};
    double acc = 0.0;
    const int n = 10000;
    for (int t = 0; t < n; ++t) {
      std::vector<CVector> s;
      for (int i = 0; i < 3; ++i) s.push_back(draw_small_scale(rng, 4));
      acc += assemble_global(gains, s).squaredNorm();
    }
    CHECK(acc / n == doctest::Approx(4.0 * 1.55).epsilon(0.02));
  }

  TEST_CASE("norm and direction are uncorrelated at equal gains") {
    std::mt19937_64 rng(8);
    LinkGains gains{{1.0, 1.0, 1.0}, 0};
    const int n = 10000;
    std::vector<double> x(n), y(n);
    for (int t = 0; t < n; ++t) {
      std::vector<CVector> s;
      for (int i = 0; i < 3; ++i) s.push_back(draw_small_scale(rng, 4));
      const CVector h = assemble_global(gains, s);
      x[t] = h.squaredNorm();
      y[t] = std::norm(h[0]) / h.squaredNorm();
    }
    double mx = 0, my = 0;
    for (int t = 0; t < n; ++t) mx += x[t], my += y[t];
    mx /= n, my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (int t = 0; t < n; ++t) {
      sxy += (x[t] - mx) * (y[t] - my);
      sxx += (x[t] - mx) * (x[t] - mx);
      syy += (y[t] - my) * (y[t] - my);
    }
    CHECK(std::abs(sxy / std::sqrt(sxx * syy)) < 0.05);
  }

  TEST_CASE("shape errors") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(draw_small_scale(rng, 0), ShapeError);
    LinkGains gains{{1.0, 1.0}, 0};
    const std::vector<CVector> one{draw_small_scale(rng, 4)};
    CHECK_THROWS_AS(assemble_global(gains, one), ShapeError);
    const std::vector<CVector> mixed{draw_small_scale(rng, 4), draw_small_scale(rng, 3)};
    CHECK_THROWS_AS(assemble_global(gains, mixed), ShapeError);
  }
}
