// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <random>
#include <span>

#include "compsel/geometry.hpp"

namespace compsel {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// i.i.d. CN(0, 1) entries: real and imaginary parts have variance 1/2.
CVector draw_small_scale(std::mt19937_64& rng, std::size_t num_antennas);

/// Stacks alpha_i * g_i over the BSs of the cluster (alpha = sqrt(alpha^2)).
CVector assemble_global(const LinkGains& gains, std::span<const CVector> smalls);

}  // namespace compsel
