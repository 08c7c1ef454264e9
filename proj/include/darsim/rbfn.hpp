#pragma once

#include <cstdint>

#include "darsim/dsc.hpp"
#include "darsim/types.hpp"

namespace darsim {

// Normalised-Gaussian network estimating the lumped uncertain dynamics from
// the 8-dimensional input r = (theta, theta_dot).
struct RbfnConfig {
  Eigen::MatrixXd centers;        // n x 8, rows (rho_1i, rho_2i)
  Eigen::VectorXd widths;         // n, Gaussian widths b_i
  Vec4 gamma = Vec4::Zero();      // per-output-channel adaptation gains
  double sigma = 1e-3;            // leakage constant
  double eps_n = 1.52;            // assumed approximation-error bound (monitor only)
  double w_f_bound = 10.0;        // assumed bound on ||W||_F (monitor only)
  std::uint64_t seed = 42;        // seed the default placement was drawn from

  int neuron_count() const { return static_cast<int>(centers.rows()); }

  void validate() const;

  // n centers drawn uniformly over theta in [-pi, pi]^4, theta_dot in
  // [-3, 3]^4 with a portable generator; all widths equal half the mean
  // nearest-neighbour centre distance.
  static RbfnConfig make_default(int n = 32, std::uint64_t seed = 42);
};

struct RbfnWeights {
  Eigen::MatrixXd w_hat;  // n x 4

  double frobenius_norm() const { return w_hat.norm(); }

  static RbfnWeights zero(const RbfnConfig& cfg);
};

// Inputs to the input-to-state-stability monitor; diagnostics only, never
// part of the control law.
struct AttractorMonitor {
  double eps_n;       // approximation-error bound
  double c3_min;      // smallest diagonal entry of c3
  double w_f_bound;   // bound on ||W||_F
  double sigma;       // leakage constant
};

// Normalised Gaussian activations; sums to one for every input (the largest
// exponent is subtracted before exponentiation, so far inputs cannot
// underflow to 0/0).
Eigen::VectorXd activations(const RbfnConfig& cfg, const Vec8& input);

// W_hat' h
Vec4 rbfn_output(const RbfnWeights& weights, const Eigen::VectorXd& h);

// Explicit-Euler step of W_hat' = Gamma (h s' - sigma ||s|| W_hat), the gain
// applied per output channel.
RbfnWeights weight_update(const RbfnWeights& weights, const RbfnConfig& cfg,
                          const Eigen::VectorXd& h, const Vec4& s, double dt);

// Control law with the lumped dynamics replaced by the network estimate;
// shares the dsc_control code path.
Vec4 rbfn_dsc_control(const DscGains& gains, const RbfnWeights& weights,
                      const Mat4& m, const Eigen::VectorXd& h, const Vec4& z1_dot,
                      const Vec4& s, const Vec4& alpha_2f_dot);

// (eps_N + sigma ||W||_F^2 / 4) / c3_min
double attractor_radius(const AttractorMonitor& monitor);

}  // namespace darsim
