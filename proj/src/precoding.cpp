// SPDX-License-Identifier: Apache-2.0
#include "compsel/precoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "compsel/errors.hpp"

namespace compsel {

namespace {

// Cholesky of H^H H. A pivot ratio below 1/kMaxConditionNumber marks the
// columns as numerically dependent.
Eigen::LLT<CMatrix> checked_cholesky(const CMatrix& channels) {
  Eigen::LLT<CMatrix> llt(CMatrix(channels.adjoint().lazyProduct(channels)));
  if (llt.info() != Eigen::Success) throw RankError("Gram matrix is not positive definite");
  const Eigen::VectorXd pivots = llt.matrixLLT().diagonal().real().cwiseAbs();
  if (pivots.minCoeff() < pivots.maxCoeff() / kMaxConditionNumber)
    throw RankError("channel columns are numerically dependent");
  return llt;
}

CMatrix inverse_gram(const CMatrix& channels) {
  const auto llt = checked_cholesky(channels);
  return llt.solve(CMatrix::Identity(channels.cols(), channels.cols()));
}

}  // namespace

double sin2_angle(const CVector& h, const CMatrix& partners) {
  const double norm_sq = h.squaredNorm();
  if (!(norm_sq > 0.0)) throw DomainError("channel vector is zero");
  if (partners.cols() == 0) return 1.0;
  if (partners.rows() != h.size()) throw ShapeError("partner length differs from h");
  if (partners.cols() >= h.size()) throw DimensionError("too many partners for the dimension");

  Eigen::ColPivHouseholderQR<CMatrix> qr(partners);
  qr.setThreshold(1.0 / kMaxConditionNumber);
  if (qr.rank() < partners.cols()) throw RankError("partner channels are numerically dependent");

  const CMatrix q = qr.householderQ() * CMatrix::Identity(h.size(), partners.cols());
  const CVector residual = h - q * (q.adjoint() * h);
  return std::clamp(residual.squaredNorm() / norm_sq, 0.0, 1.0);
}

double effective_gain(const CMatrix& channels) {
  if (channels.cols() == 0) throw ShapeError("empty user set");
  if (channels.cols() > channels.rows()) throw DimensionError("more users than antennas");
  const auto llt = checked_cholesky(channels);
  // [G^{-1}]_{00} = |L^{-1} e_0|^2
  CVector e0 = CVector::Zero(channels.cols());
  e0(0) = 1.0;
  const CVector y = llt.matrixL().solve(e0);
  return 1.0 / y.squaredNorm();
}

double effective_gain_projection(const CMatrix& channels) {
  if (channels.cols() == 0) throw ShapeError("empty user set");
  const CVector h = channels.col(0);
  const CMatrix partners = channels.rightCols(channels.cols() - 1);
  return h.squaredNorm() * sin2_angle(h, partners);
}

Eigen::VectorXd inverse_gram_diagonal(const CMatrix& channels) {
  return inverse_gram(channels).diagonal().real();
}

PrecodeResult comp_precode(const CMatrix& channels, double tx_power, std::size_t num_bs,
                           std::size_t users_per_bs, double noise) {
  const auto n = static_cast<std::size_t>(channels.cols());
  if (n == 0) throw ShapeError("empty user set");
  if (n > static_cast<std::size_t>(channels.rows()))
    throw DimensionError("more CoMP users than cluster antennas");
  if (n > num_bs * users_per_bs) throw DimensionError("more CoMP users than B*M");

  const CMatrix ginv = inverse_gram(channels);
  PrecodeResult out;
  out.power.resize(channels.cols());
  out.sinr.resize(channels.cols());
  for (Eigen::Index k = 0; k < channels.cols(); ++k) {
    out.power(k) = tx_power / (static_cast<double>(users_per_bs) * ginv(k, k).real());
    out.sinr(k) = out.power(k) / noise;
  }
  out.precoders = channels * ginv * out.power.cwiseSqrt().asDiagonal();
  return out;
}

PrecodeResult noncomp_precode(const CMatrix& local, double tx_power, std::size_t users_per_bs,
                              std::span<const LinkGains> gains, double noise) {
  const auto n = static_cast<std::size_t>(local.cols());
  if (n == 0) throw ShapeError("empty user set");
  if (n > static_cast<std::size_t>(local.rows()))
    throw DimensionError("more users than BS antennas");
  if (n > users_per_bs) throw DimensionError("more users than M");
  if (gains.size() != n) throw ShapeError("one LinkGains per column required");

  const CMatrix ginv = inverse_gram(local);
  PrecodeResult out;
  out.power.resize(local.cols());
  out.sinr.resize(local.cols());
  for (Eigen::Index k = 0; k < local.cols(); ++k) {
    const LinkGains& g = gains[static_cast<std::size_t>(k)];
    out.power(k) = tx_power / (static_cast<double>(users_per_bs) * ginv(k, k).real());
    out.sinr(k) = g.serving_gain() * out.power(k) / (tx_power * g.interference_sum() + noise);
  }
  out.precoders = local * ginv * out.power.cwiseSqrt().asDiagonal();
  return out;
}

double max_iui_leakage(const CMatrix& channels, const CMatrix& precoders) {
  const CMatrix cross = channels.adjoint() * precoders;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < cross.rows(); ++j)
    for (Eigen::Index k = 0; k < cross.cols(); ++k) {
      if (j == k) continue;
      const double scale = channels.col(j).norm() * precoders.col(k).norm();
      worst = std::max(worst, std::abs(cross(j, k)) / scale);
    }
  return worst;
}

double ici_expectation_check(double alpha_sq, double tx_power, std::size_t users_per_bs,
                             std::size_t num_antennas, std::mt19937_64& rng,
                             std::size_t trials) {
  if (alpha_sq == 0.0 || tx_power == 0.0 || trials == 0) return 0.0;
  if (users_per_bs > num_antennas) throw DimensionError("M exceeds N_t");

  const auto m = static_cast<Eigen::Index>(users_per_bs);
  const auto nt = static_cast<Eigen::Index>(num_antennas);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  double sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    CMatrix local(nt, m);
    for (Eigen::Index k = 0; k < m; ++k) local.col(k) = draw_small_scale(rng, num_antennas);
    const CMatrix ginv = inverse_gram(local);
    CVector x(m);
    for (Eigen::Index k = 0; k < m; ++k) {
      const double p = tx_power / (static_cast<double>(users_per_bs) * ginv(k, k).real());
      x(k) = std::sqrt(p) * std::polar(1.0, phase(rng));
    }
    const CVector transmitted = local * ginv * x;
    const CVector g = draw_small_scale(rng, num_antennas);
    sum += alpha_sq * std::norm(g.dot(transmitted));
  }
  return sum / static_cast<double>(trials);
}

}  // namespace compsel
