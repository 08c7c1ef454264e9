#include "darsim/dsc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace darsim {

void DscGains::validate() const {
  for (int i = 0; i < 4; ++i) {
    if (c1[i] <= 0.0 || c2[i] <= 0.0 || c3[i] <= 0.0)
      throw std::invalid_argument("DscGains: diagonal entries of c1, c2, c3 must be > 0");
    if (lambda[i] <= 0.0)
      throw std::invalid_argument("DscGains: diagonal entries of lambda must be > 0");
  }
  if (tau <= 0.0) throw std::invalid_argument("DscGains: filter constant tau must be > 0");
  if (boundary_layer < 0.0)
    throw std::invalid_argument("DscGains: boundary_layer must be >= 0");
}

DscGains DscGains::table1() {
  DscGains g;
  g.c1 = Vec4::Constant(122.0);
  g.c2 = Vec4::Constant(122.0);
  g.c3 = Vec4::Constant(152.0);
  g.lambda = Vec4::Constant(15.0);
  g.tau = 0.01;
  g.boundary_layer = 0.15;
  return g;
}

Vec4 virtual_control(const DscGains& gains, const Vec4& z1, const Vec4& x1r_dot) {
  return x1r_dot - gains.c1.cwiseProduct(z1);
}

DscState init_filter(const Vec4& alpha0) { return DscState{alpha0}; }

DscState filter_step(const DscState& state, const DscGains& gains, const Vec4& alpha,
                     double dt) {
  if (dt <= 0.0) throw std::invalid_argument("filter_step: dt must be > 0");
  const double ratio = dt / gains.tau;
  if (ratio > 0.5)
    throw std::invalid_argument("filter_step: dt/tau = " + std::to_string(ratio) +
                                " exceeds the stability bound 0.5");
  DscState next;
  next.alpha_2f = state.alpha_2f + ratio * (alpha - state.alpha_2f);
  return next;
}

Vec4 sliding_surface(const DscGains& gains, const Vec4& z1, const Vec4& z2) {
  return gains.lambda.cwiseProduct(z1) + z2;
}

Vec4 switching_term(const DscGains& gains, const Vec4& s) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) {
    double sw;
    if (gains.boundary_layer > 0.0)
      sw = std::clamp(s[i] / gains.boundary_layer, -1.0, 1.0);
    else
      sw = s[i] > 0.0 ? 1.0 : (s[i] < 0.0 ? -1.0 : 0.0);
    out[i] = gains.c2[i] * sw + gains.c3[i] * s[i];
  }
  return out;
}

Vec4 dsc_control(const DscGains& gains, const Mat4& m, const Vec4& lumped_k,
                 const Vec4& z1_dot, const Vec4& s, const Vec4& alpha_2f_dot) {
  return -m * (switching_term(gains, s) + gains.lambda.cwiseProduct(z1_dot) -
               alpha_2f_dot) -
         lumped_k;
}

SurfaceDiagnostics surface_diagnostics(const DscGains& gains, const Vec4& z1,
                                       const Vec4& z2) {
  SurfaceDiagnostics d;
  d.z1 = z1;
  d.z2 = z2;
  d.s = sliding_surface(gains, z1, z2);
  d.v1 = 0.5 * z1.squaredNorm();
  d.v2_core = d.v1 + 0.5 * d.s.squaredNorm();
  return d;
}

}  // namespace darsim
