// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "compsel/errors.hpp"
#include "compsel/precoding.hpp"
#include "compsel/scheduling.hpp"

using namespace compsel;

namespace {

std::vector<std::size_t> cells_of(std::size_t b, std::size_t k) {
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < b; ++i) c.insert(c.end(), k, i);
  return c;
}

CMatrix stack(const std::vector<CVector>& v, const std::vector<std::size_t>& idx) {
  CMatrix m(v.front().size(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = v[idx[k]];
  return m;
}

}  // namespace

TEST_SUITE("scheduling") {
  TEST_CASE("random schedule sizes and distinctness") {
    Stream rng(1);
    const auto cells = cells_of(3, 10);
    const auto comp = random_schedule(cells, 2, 3, Mode::CoMP, rng);
    CHECK(comp.selected.size() == 6);
    CHECK(std::set(comp.selected.begin(), comp.selected.end()).size() == 6);
    const auto nc = random_schedule(cells, 2, 3, Mode::NonCoMP, rng);
    REQUIRE(nc.selected.size() == 6);
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(std::count_if(nc.selected.begin(), nc.selected.end(),
                          [&](std::size_t u) { return cells[u] == c; }) == 2);
  }

  TEST_CASE("random schedule of an exact pool returns that pool") {
    Stream rng(2);
    const auto cells = cells_of(3, 2);
    auto s = random_schedule(cells, 2, 3, Mode::CoMP, rng).selected;
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(random_schedule(cells_of(3, 1), 2, 3, Mode::CoMP, rng), SchedulingError);
    CHECK_THROWS_AS(random_schedule(cells_of(3, 1), 2, 3, Mode::NonCoMP, rng), SchedulingError);
  }

  TEST_CASE("random schedule is reproducible") {
    const auto cells = cells_of(3, 10);
    Stream a(9), b(9);
    CHECK(random_schedule(cells, 2, 3, Mode::CoMP, a).selected ==
          random_schedule(cells, 2, 3, Mode::CoMP, b).selected);
  }

  TEST_CASE("SUS on orthogonal equal-norm channels reaches full orthogonality") {
    std::vector<CVector> ch;
    for (int i = 0; i < 4; ++i) {
      CVector e = CVector::Zero(4);
      e(i) = 1.0;
      ch.push_back(e);
    }
    const auto r = sus_select(ch, 2);
    REQUIRE(r.selected.size() == 2);
    const CMatrix h = stack(ch, r.selected);
    CHECK(sin2_angle(h.col(0), h.rightCols(1)) == doctest::Approx(1.0));
  }

  TEST_CASE("SUS never picks a scalar multiple before an independent candidate") {
    std::vector<CVector> ch(3, CVector::Zero(3));
    ch[0] << 3.0, 0.0, 0.0;
    ch[1] << 0.0, 0.0, 0.1;
    ch[2] << std::complex<double>(0.0, 2.0), 0.0, 0.0;
    const auto r = sus_select(ch, 3);
    REQUIRE(r.selected.size() == 2);
    CHECK(r.selected[0] == 0);
    CHECK(r.selected[1] == 1);
  }

  TEST_CASE("every SUS pick has the largest residual among the remaining candidates") {
    Stream rng(3);
    for (int t = 0; t < 200; ++t) {
      std::vector<CVector> ch;
      for (int k = 0; k < 12; ++k) ch.push_back(draw_small_scale(rng, 4) * (0.5 + k * 0.1));
      const auto r = sus_select(ch, 4);
      REQUIRE(r.selected.size() == 4);
      for (std::size_t step = 0; step < r.selected.size(); ++step) {
        const std::vector<std::size_t> taken(r.selected.begin(), r.selected.begin() + step);
        for (std::size_t k = 0; k < ch.size(); ++k) {
          if (std::find(taken.begin(), taken.end(), k) != taken.end()) continue;
          double res = ch[k].squaredNorm();
          if (!taken.empty())
            res *= sin2_angle(ch[k], stack(ch, taken));
          CHECK(res <= r.residual_sq[step] * (1.0 + 1e-9));
        }
      }
    }
  }

  TEST_CASE("forced first pick and threshold filter") {
    Stream rng(4);
    std::vector<CVector> ch;
    for (int k = 0; k < 10; ++k) ch.push_back(draw_small_scale(rng, 4));
    SusOptions o;
    o.first = 7;
    CHECK(sus_select(ch, 2, o).selected.front() == 7);
    o.orthogonality_threshold = 0.4;
    const auto r = sus_select(ch, 4, o);
    for (std::size_t i = 1; i < r.selected.size(); ++i) {
      const CVector& h = ch[r.selected[i]];
      CHECK(std::abs(ch[7].normalized().dot(h)) / h.norm() < 0.4);
    }
    o.first = 10;
    CHECK_THROWS_AS(sus_select(ch, 2, o), SchedulingError);
  }

  TEST_CASE("SUS schedule respects the per-cell split") {
    Stream rng(5);
    const auto cells = cells_of(3, 10);
    std::vector<CVector> ch;
    for (std::size_t u = 0; u < cells.size(); ++u) ch.push_back(draw_small_scale(rng, 4));
    const auto nc = sus_schedule(ch, cells, 2, 3, Mode::NonCoMP);
    REQUIRE(nc.selected.size() == 6);
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(std::count_if(nc.selected.begin(), nc.selected.end(),
                          [&](std::size_t u) { return cells[u] == c; }) == 2);
  }

  TEST_CASE("closed-form orthogonality") {
    CHECK(expected_orthogonality(OrthogonalityModel::Random, 3, 4, 2, Mode::NonCoMP) == 0.75);
    CHECK(expected_orthogonality(OrthogonalityModel::Random, 3, 4, 2, Mode::CoMP) ==
          doctest::Approx(7.0 / 12.0).epsilon(1e-15));
    CHECK(expected_orthogonality(OrthogonalityModel::Random, 3, 4, 1, Mode::NonCoMP) == 1.0);
    CHECK(expected_orthogonality(OrthogonalityModel::Random, 3, 4, 1, Mode::CoMP) ==
          doctest::Approx(10.0 / 12.0).epsilon(1e-15));
    CHECK(expected_orthogonality(OrthogonalityModel::LargePool, 3, 4, 2, Mode::CoMP) == 1.0);
    CHECK_THROWS_AS(expected_orthogonality(OrthogonalityModel::Random, 3, 4, 5, Mode::CoMP),
                    DimensionError);
    for (std::size_t nt = 2; nt <= 8; ++nt)
      for (std::size_t m = 2; m <= nt; ++m)
        CHECK(expected_orthogonality(OrthogonalityModel::Random, 3, nt, m, Mode::CoMP) <
              expected_orthogonality(OrthogonalityModel::Random, 3, nt, m, Mode::NonCoMP));
  }

  TEST_CASE("random-scheduling Monte Carlo matches the closed forms") {
    OrthogonalityStudy s;
    const auto e = estimate_orthogonality(s, 100000, 17);
    CHECK(e.lambda == doctest::Approx(0.75).epsilon(0.01));
    CHECK(e.delta == doctest::Approx(7.0 / 12.0).epsilon(0.01));
    CHECK(e.delta < e.lambda);
  }

  TEST_CASE("SUS beats random scheduling") {
    OrthogonalityStudy s;
    s.scheduler = SchedulerKind::Sus;
    const auto plain = estimate_orthogonality(s, 10000, 18);
    CHECK(plain.lambda > 0.75);
    CHECK(plain.lambda <= 1.0);
    s.sus_threshold = 0.4;
    const auto filtered = estimate_orthogonality(s, 10000, 18);
    CHECK(filtered.lambda > 0.9);
    CHECK(filtered.delta < filtered.lambda);
  }

  TEST_CASE("estimate is identical serially and in parallel") {
    OrthogonalityStudy s;
    s.scheduler = SchedulerKind::Sus;
    const auto a = estimate_orthogonality(s, 500, 3, kSerial);
    const auto b = estimate_orthogonality(s, 500, 3, {Execution::Parallel, 4});
    CHECK(a.lambda == b.lambda);
    CHECK(a.delta == b.delta);
  }
}
