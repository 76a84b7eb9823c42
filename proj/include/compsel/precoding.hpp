// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <random>
#include <span>

#include "compsel/fading.hpp"
#include "compsel/geometry.hpp"

namespace compsel {

/// Columns whose condition number exceeds this are treated as dependent.
inline constexpr double kMaxConditionNumber = 1e12;

/// Squared sine of the angle between `h` and span(partners), computed from the
/// projection residual. An empty partner set gives 1.
double sin2_angle(const CVector& h, const CMatrix& partners);

/// 1 / [(H^H H)^{-1}]_{1,1}, column 0 being the user of interest.
/// Solved through a Cholesky factorization of the Gram matrix.
double effective_gain(const CMatrix& channels);

/// |h_0|^2 sin^2(theta_0) using the projection residual of column 0.
double effective_gain_projection(const CMatrix& channels);

/// Diagonal of (H^H H)^{-1} for all columns.
Eigen::VectorXd inverse_gram_diagonal(const CMatrix& channels);

/// Zero-forcing precoders and the per-user power/SINR they achieve.
struct PrecodeResult {
  CMatrix precoders;
  Eigen::VectorXd power;
  Eigen::VectorXd sinr;
};

/// Joint ZF over the cluster with per-user power P / (M [(H^H H)^{-1}]_{k,k}).
/// `channels` holds global vectors (length B N_t) as columns.
PrecodeResult comp_precode(const CMatrix& channels, double tx_power, std::size_t num_bs,
                           std::size_t users_per_bs, double noise);

/// Single-cell ZF at one BS. `local` holds small-scale vectors g_b (length N_t)
/// of the active users; `gains` holds each column's large-scale gains. The ICI
/// from the other BSs enters through its mean P * alpha^2_i.
PrecodeResult noncomp_precode(const CMatrix& local, double tx_power, std::size_t users_per_bs,
                              std::span<const LinkGains> gains, double noise);

/// Largest normalized |h_j^H v_k| over j != k.
double max_iui_leakage(const CMatrix& channels, const CMatrix& precoders);

/// Monte Carlo mean of |alpha g^H W x|^2 for an interfering BS serving M random
/// users with ZF and equal per-user power, unit-modulus symbols.
double ici_expectation_check(double alpha_sq, double tx_power, std::size_t users_per_bs,
                             std::size_t num_antennas, std::mt19937_64& rng,
                             std::size_t trials);

}  // namespace compsel
