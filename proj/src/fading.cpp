// SPDX-License-Identifier: Apache-2.0
#include "compsel/fading.hpp"

#include <cmath>

#include "compsel/errors.hpp"

namespace compsel {

CVector draw_small_scale(std::mt19937_64& rng, std::size_t num_antennas) {
  if (num_antennas < 1) throw ShapeError("need at least one antenna");
  std::normal_distribution<double> part(0.0, std::sqrt(0.5));
  CVector g(static_cast<Eigen::Index>(num_antennas));
  for (auto& entry : g) {
    const double re = part(rng);
    entry = {re, part(rng)};
  }
  return g;
}

CVector assemble_global(const LinkGains& gains, std::span<const CVector> smalls) {
  if (smalls.size() != gains.alpha_sq.size())
    throw ShapeError("one small-scale vector per BS required");
  const Eigen::Index nt = smalls.empty() ? 0 : smalls.front().size();
  CVector h(nt * static_cast<Eigen::Index>(smalls.size()));
  for (std::size_t i = 0; i < smalls.size(); ++i) {
    if (smalls[i].size() != nt) throw ShapeError("small-scale vectors differ in length");
    h.segment(static_cast<Eigen::Index>(i) * nt, nt) = std::sqrt(gains.alpha_sq[i]) * smalls[i];
  }
  return h;
}

}  // namespace compsel
