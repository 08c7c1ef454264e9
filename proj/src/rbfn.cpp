#include "darsim/rbfn.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <numbers>

namespace darsim {

void RbfnConfig::validate() const {
  if (centers.rows() < 1)
    throw std::invalid_argument("RbfnConfig: neuron count must be >= 1");
  if (centers.cols() != 8)
    throw std::invalid_argument("RbfnConfig: centers must have 8 columns (theta, theta_dot)");
  if (widths.size() != centers.rows())
    throw std::invalid_argument("RbfnConfig: one width per centre required");
  if ((widths.array() <= 0.0).any())
    throw std::invalid_argument("RbfnConfig: all widths must be > 0");
  if ((gamma.array() <= 0.0).any())
    throw std::invalid_argument("RbfnConfig: diagonal entries of Gamma must be > 0");
  if (sigma <= 0.0) throw std::invalid_argument("RbfnConfig: leakage sigma must be > 0");
  if (eps_n <= 0.0) throw std::invalid_argument("RbfnConfig: eps_n must be > 0");
  if (w_f_bound <= 0.0) throw std::invalid_argument("RbfnConfig: w_f_bound must be > 0");
}

RbfnConfig RbfnConfig::make_default(int n, std::uint64_t seed) {
  RbfnConfig cfg;
  cfg.seed = seed;
  cfg.centers.resize(n, 8);
  std::mt19937_64 gen(seed);
  // portable uniform in [0, 1): mt19937_64 output is specified bit-exactly,
  // distribution objects are not
  const auto uniform = [&gen]() {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  };
  constexpr double pi = std::numbers::pi;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 4; ++j) cfg.centers(i, j) = -pi + 2.0 * pi * uniform();
    for (int j = 4; j < 8; ++j) cfg.centers(i, j) = -3.0 + 6.0 * uniform();
  }
  double mean_nn = 0.0;
  for (int i = 0; i < n; ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j)
      if (j != i) nearest = std::min(nearest, (cfg.centers.row(i) - cfg.centers.row(j)).norm());
    mean_nn += n > 1 ? nearest : 1.0;
  }
  mean_nn /= n;
  cfg.widths = Eigen::VectorXd::Constant(n, 0.5 * mean_nn);
  cfg.gamma = Vec4::Constant(30.0);
  return cfg;
}

RbfnWeights RbfnWeights::zero(const RbfnConfig& cfg) {
  return RbfnWeights{Eigen::MatrixXd::Zero(cfg.neuron_count(), 4)};
}

Eigen::VectorXd activations(const RbfnConfig& cfg, const Vec8& input) {
  const int n = cfg.neuron_count();
  Eigen::VectorXd exponent(n);
  for (int i = 0; i < n; ++i) {
    const double d2 = (input.transpose() - cfg.centers.row(i)).squaredNorm();
    exponent[i] = -d2 / (cfg.widths[i] * cfg.widths[i]);
  }
  const double peak = exponent.maxCoeff();
  Eigen::VectorXd h = (exponent.array() - peak).exp();
  return h / h.sum();
}

Vec4 rbfn_output(const RbfnWeights& weights, const Eigen::VectorXd& h) {
  return weights.w_hat.transpose() * h;
}

RbfnWeights weight_update(const RbfnWeights& weights, const RbfnConfig& cfg,
                          const Eigen::VectorXd& h, const Vec4& s, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("weight_update: dt must be > 0");
  RbfnWeights next;
  next.w_hat = weights.w_hat +
               dt * (h * s.transpose() - cfg.sigma * s.norm() * weights.w_hat) *
                   cfg.gamma.asDiagonal();
  return next;
}

Vec4 rbfn_dsc_control(const DscGains& gains, const RbfnWeights& weights,
                      const Mat4& m, const Eigen::VectorXd& h, const Vec4& z1_dot,
                      const Vec4& s, const Vec4& alpha_2f_dot) {
  return dsc_control(gains, m, rbfn_output(weights, h), z1_dot, s, alpha_2f_dot);
}

double attractor_radius(const AttractorMonitor& monitor) {
  return (monitor.eps_n + monitor.sigma * monitor.w_f_bound * monitor.w_f_bound / 4.0) /
         monitor.c3_min;
}

}  // namespace darsim
